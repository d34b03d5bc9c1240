use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NonDominantInput(String),

    #[error("unknown group type `{0}`")]
    UnknownType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid pair: {check} failed ({detail})")]
    InvalidPair { check: String, detail: String },

    #[error("operation requires a diagonal pair G in GxG")]
    NotDiagonalPair,

    #[error("negative coefficient {coefficient} at {weight} while peeling characters")]
    NegativeCoefficient { weight: String, coefficient: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
