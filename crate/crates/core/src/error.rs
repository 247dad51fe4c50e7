use thiserror::Error;

use crate::classify::Refutation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization of zero is undefined")]
    ZeroInput,

    #[error("{m} is not a sum of {k} squares")]
    NotRepresentable { m: String, k: usize },

    #[error("invalid dimensions: need 1 <= d <= n, got d = {d}, n = {n}")]
    InvalidDimensions { d: usize, n: usize },

    #[error("{m} is not the squared side of a {d}-cube in Z^{n} ({reason})")]
    NotMember {
        m: String,
        d: usize,
        n: usize,
        reason: Refutation,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cube dimension {d} exceeds the expansion limit of {limit}")]
    TooLarge { d: usize, limit: usize },

    #[error("vectors {i} and {j} are not orthogonal")]
    NotOrthogonal { i: usize, j: usize },

    #[error("vector {index} is zero")]
    ZeroVector { index: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
