use crate::algebra::Index;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index entries must be at least 1, found {0}")]
    InvalidIndexEntry(u64),

    #[error("malformed index text {0:?}")]
    IndexSyntax(String),

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds truncation order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },

    #[error("exp is only defined for series with zero constant term")]
    NonzeroConstantTerm,

    #[error("index {0} must have even positive weight")]
    OddWeight(Index),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("zeta{0} diverges: last entry must be at least 2")]
    Divergent(Index),

    #[error("index {index} has depth {depth}, above the limit {limit}")]
    DepthLimit { index: Index, depth: usize, limit: usize },

    #[error("zeta{index} reached error bound {best_bound:e} within {terms} terms, tolerance not met")]
    Precision {
        index: Index,
        best_bound: f64,
        terms: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
