// Colored Robinson–Schensted on every 2-colored permutation of [3]: the map is injective
// and each pair has equal shapes.

use std::collections::HashSet;
use std::fmt::Write;

use injective_words::combinatorics::factorial;
use injective_words::tau::{colored_rsk, enumerate_colored_permutations};

pub fn run_example() -> injective_words::Result<String> {
    let (n, r) = (3, 2);
    let mut out = String::new();
    let mut seen = HashSet::new();
    for u in enumerate_colored_permutations(n, r) {
        let (p0, q0) = colored_rsk(&u);
        assert_eq!(p0.shape(), q0.tableau().shape());
        if seen.len() < 6 {
            writeln!(
                out,
                "{u} -> P0={:?} Q0={:?} colors {:?}",
                p0.rows(),
                q0.tableau().rows(),
                q0.colors()
            )
            .unwrap();
        }
        seen.insert((p0, q0));
    }
    writeln!(
        out,
        "{} colored permutations, {} distinct pairs",
        num_bigint::BigUint::from(r).pow(n as u32) * factorial(n),
        seen.len()
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
