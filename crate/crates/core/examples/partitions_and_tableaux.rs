// Partitions of n in canonical order, with the number of standard Young tableaux of
// each shape by the hook length formula and by direct enumeration.

use std::fmt::Write;

use injective_words::combinatorics::{
    enumerate_partitions, enumerate_syt, f_lambda, f_lambda_first_row, factorial,
};

pub fn run_example() -> injective_words::Result<String> {
    let n = 5;
    let mut out = String::new();
    writeln!(out, "partitions of {n}: shape, f^λ, #SYT, f^(λ,2)").unwrap();
    let mut square_sum = num_bigint::BigUint::from(0u32);
    for lambda in enumerate_partitions(n) {
        let f = f_lambda(&lambda);
        let listed = enumerate_syt(&lambda).len();
        writeln!(
            out,
            "  {:<12} {f:>3} {listed:>3} {:>3}",
            lambda.to_string(),
            f_lambda_first_row(&lambda, 2)
        )
        .unwrap();
        square_sum += &f * &f;
    }
    writeln!(out, "Σ (f^λ)² = {square_sum} = {n}! = {}", factorial(n)).unwrap();
    let first = enumerate_syt(&"3,2".parse()?)
        .into_iter()
        .next()
        .expect("shape (3,2) has tableaux");
    writeln!(
        out,
        "first tableau of shape (3,2): {:?}, descents {}",
        first.rows(),
        first.descent_set()
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
