use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("root system mismatch: {0} vs {1}")]
    RootSystemMismatch(String, String),
    #[error("highest weight {0} is not dominant")]
    NotDominant(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("not a genuine character: {0}")]
    NotGenuine(String),
    #[error("m = {m} out of range for dimension {dim}")]
    MOutOfRange { m: usize, dim: u128 },
    #[error("dimension {dim} exceeds tractability bound {bound}")]
    Intractable { dim: u128, bound: u128 },
    #[error("unsupported representation: {0}")]
    Unsupported(String),
    #[error("matrix construction failed: {0}")]
    Construction(String),
    #[error("rank-deficient input: {0}")]
    RankDeficient(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
