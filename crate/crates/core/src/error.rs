use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid rank set {elements:?}: entries must lie in 1..={bound}")]
    InvalidRankSet { elements: Vec<usize>, bound: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("color {color} out of range for r = {r}")]
    InvalidColor { color: usize, r: usize },

    #[error("permutation {word:?} has descent set {actual:?}, expected {expected:?}")]
    DescentMismatch {
        word: Vec<usize>,
        expected: Vec<usize>,
        actual: Vec<usize>,
    },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("not a virtual character: inner product with {partition} is {value}")]
    NotVirtualCharacter { partition: String, value: String },

    #[error("resource budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
