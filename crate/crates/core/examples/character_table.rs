// The character table of S_4 by the Murnaghan–Nakayama rule, and the decomposition of
// the permutation character on 2-letter injective words.

use std::fmt::Write;

use injective_words::characters::{decompose, small_values, CharacterTable};
use injective_words::rank_selection::alpha_rank_m_closed_form;

pub fn run_example() -> injective_words::Result<String> {
    let n = 4;
    let table = CharacterTable::shared(n);
    let mut out = String::new();
    let classes: Vec<String> = table.shapes().iter().map(|p| p.to_string()).collect();
    writeln!(out, "{:<10} {}", "χ \\ class", classes.join(" ")).unwrap();
    for (lambda, chi) in table.iter() {
        writeln!(out, "{:<10} {:?}", lambda.to_string(), small_values(chi)).unwrap();
    }
    let alpha = alpha_rank_m_closed_form(n, 1, 2)?;
    writeln!(out, "words of length 2: values {:?}", small_values(&alpha)).unwrap();
    for (lambda, m) in decompose(&alpha)? {
        writeln!(out, "  {m} × χ^{lambda}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
