//! Partitions, tableaux, permutations and descent statistics.
//!
//! Canonical orders used throughout the crate:
//! partitions are listed reverse-lexicographically (`(n)` first), standard tableaux by
//! placing `1..n` in the topmost available row first, permutations lexicographically, and
//! rank sets by increasing bit mask.

pub mod partition;
pub mod permutation;
pub mod rank_set;
pub mod tableau;

pub use partition::{enumerate_partitions, factorial, Partition};
pub use permutation::{
    binomial, boolean_chain_count, descent_count, enumerate_descent_class, enumerate_permutations,
    w_max, Permutation,
};
pub use rank_set::RankSet;
pub use tableau::{
    enumerate_colored_syt, enumerate_syt, f_lambda, f_lambda_first_row, ColoredTableau,
    ColoredTableaux, StandardTableau,
};
