// Builds the poset of 2-colored injective words on [2], lists its elements by rank and
// counts maximal chains of every rank-selected subposet.

use std::fmt::Write;

use injective_words::combinatorics::RankSet;
use injective_words::poset::{
    alpha_character, enumerate_maximal_chains, InjectiveWordPoset, DEFAULT_BUDGET,
};
use injective_words::render::{chain_rows, render_chains, Format};

pub fn run_example() -> injective_words::Result<String> {
    let (n, r) = (2, 2);
    let poset = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET)?;
    let mut out = String::new();
    writeln!(out, "{} elements including the top", poset.element_count()).unwrap();
    for k in 0..=n {
        let words: Vec<String> = poset.layer(k).iter().map(|w| w.to_string()).collect();
        writeln!(out, "rank {k}: {}", words.join(" ")).unwrap();
    }
    let full = RankSet::full(n);
    let chain = enumerate_maximal_chains(&poset, &full)?
        .next()
        .expect("poset has chains");
    let shown: Vec<String> = chain.interior().iter().map(|x| x.to_string()).collect();
    writeln!(out, "a maximal chain: {}", shown.join(" < ")).unwrap();
    let alpha = alpha_character(&poset, &full)?;
    writeln!(out, "fixed maximal chains per class: {:?}", alpha.values()).unwrap();
    let sets: Vec<RankSet> = RankSet::all_subsets(n).collect();
    out.push_str(&render_chains(
        n,
        r,
        &chain_rows(&poset, &sets)?,
        Format::Md,
    )?);
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
