// The τ statistic on pairs (w, Q) with Des(w) = {1, 2}, n = 3, and the resulting parity
// counts, which give the multiplicities of each irreducible in β({1,2}) and β({1,2,3}).

use std::fmt::Write;

use injective_words::combinatorics::{
    enumerate_colored_syt, enumerate_descent_class, enumerate_partitions, RankSet,
};
use injective_words::tau::{count_pairs_by_parity, tau_qualifying_indices, tau_tableau};

pub fn run_example() -> injective_words::Result<String> {
    let (n, r) = (3, 1);
    let s = RankSet::new(vec![1, 2], n - 1)?;
    let mut out = String::new();
    for w in enumerate_descent_class(n, &s)? {
        for lambda in enumerate_partitions(n) {
            for q in enumerate_colored_syt(&lambda, r) {
                let tau = tau_tableau(&w, &s, &q)?;
                let qualifying = tau_qualifying_indices(&w, &s, &q)?;
                writeln!(
                    out,
                    "w={w} Q={:?} τ={tau} qualifying={qualifying:?}",
                    q.tableau().rows()
                )
                .unwrap();
            }
        }
    }
    for lambda in enumerate_partitions(n) {
        let c = count_pairs_by_parity(n, r, &s, &lambda)?;
        writeln!(out, "{lambda}: odd {} even {}", c.odd, c.even).unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
