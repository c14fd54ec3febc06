use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(u32),

    #[error("cell ({a}, {b}) is outside the triangular scheme for n = {n}")]
    InvalidCell { a: u32, b: u32, n: u32 },

    #[error("row index {r} is outside 1..={max}")]
    RowOutOfRange { r: u32, max: u32 },

    #[error("weight {0:?} is not dominant integral for C_n")]
    NonDominantWeight(Vec<i64>),

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("expected a colored partition of length {expected}, got length {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("expected parts with adjacent degrees, got degrees {0} and {1}")]
    NotAdjacent(i32, i32),

    #[error("part of degree {0} is not allowed here, parts must have negative degree")]
    NonNegativeDegree(i32),

    #[error("census degree must be at most -3, got {0}")]
    CensusDegree(i32),

    #[error("partition {0} does not have the shape (-j-1, -j, -j)")]
    NotCaseOne(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("internal error: {0}")]
    Internal(String),
}
