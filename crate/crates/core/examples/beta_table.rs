// The multiplicity table of β(S) for n = 3, r = 2 by all three methods, checked equal,
// followed by the two summation identities.

use injective_words::combinatorics::RankSet;
use injective_words::poset::DEFAULT_BUDGET;
use injective_words::rank_selection::{
    beta_complement_sum_check, total_beta_sum_check, BetaTable, Method,
};
use injective_words::render::{render_table, Format};

pub fn run_example() -> injective_words::Result<String> {
    let (n, r) = (3, 2);
    let tables = Method::ALL
        .iter()
        .map(|&m| BetaTable::compute(n, r, m, DEFAULT_BUDGET))
        .collect::<injective_words::Result<Vec<_>>>()?;
    assert!(tables.windows(2).all(|w| w[0].rows == w[1].rows));
    let mut out = render_table(&tables[0], Format::Md)?;
    let mut records = Vec::new();
    for s in RankSet::all_subsets(n - 1) {
        records.extend(beta_complement_sum_check(&tables[0], &s)?);
    }
    records.push(total_beta_sum_check(&tables[0])?);
    for rec in records {
        out.push_str(&format!(
            "{} {} [{}]\n",
            rec.status, rec.anchor, rec.parameters
        ));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
