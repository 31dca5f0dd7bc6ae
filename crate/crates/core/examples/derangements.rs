// Colored derangement numbers by the alternating sum, by direct count, and by the
// parity of the longest increasing zero-colored prefix.

use std::fmt::Write;

use injective_words::tau::{derangement_count_direct, derangement_number, desarmenien_count};

pub fn run_example() -> injective_words::Result<String> {
    let mut out = String::new();
    writeln!(out, "n r   D(formula) D(direct) E").unwrap();
    for r in 1..=3 {
        for n in 1..=4 {
            writeln!(
                out,
                "{n} {r}   {:>10} {:>9} {:>5}",
                derangement_number(n, r),
                derangement_count_direct(n, r),
                desarmenien_count(n, r)
            )
            .unwrap();
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
