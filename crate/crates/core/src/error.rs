use thiserror::Error;

/// Errors shared across the engine. Parse failures, domain violations and
/// resource caps are kept distinct so callers can map them to exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i64, rank: usize },

    #[error("invalid window: {0}")]
    BadWindow(String),

    #[error("word is not reduced")]
    NotReduced,

    #[error("expected a type A element (all-positive window)")]
    NotTypeA,

    #[error("length {length} exceeds the cap {cap}")]
    ResourceLimit { length: usize, cap: usize },

    #[error("invalid factorization: {0}")]
    BadFactorization(String),

    #[error("factorization kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },

    #[error("invalid tableau: {0}")]
    BadTableau(String),

    #[error("tableau shapes do not match")]
    ShapeMismatch,

    #[error("alphabet bound exceeded: {0}")]
    Alphabet(String),

    #[error("reverse insertion failed: {0}")]
    ReverseInsertion(String),

    #[error("not symmetric in the {block} block: swapping variables {i} and {j} changes the polynomial")]
    NotSymmetric { block: char, i: usize, j: usize },

    #[error("partition {0} is not strict")]
    NotStrict(String),

    #[error("basis expansion failed: {0}")]
    Expansion(String),

    #[error("conversion failed: {0}")]
    Conversion(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
