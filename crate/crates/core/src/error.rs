use crate::freemod::Basis;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: Basis, right: Basis },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid key `{key}`: {reason}")]
    InvalidKey { key: String, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("operation `{op}` requires arguments of positive degree")]
    ZeroDegree { op: &'static str },

    #[error("element is not a sum of whole classes: {0}")]
    NotSaturated(String),

    #[error("expansion is not unitriangular at key {0}")]
    NonTriangular(String),

    #[error("elements {0} and {1} are not comparable")]
    Incomparable(String, String),

    #[error("{what} {requested} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid_key(key: impl ToString, reason: impl ToString) -> Self {
        Error::InvalidKey {
            key: key.to_string(),
            reason: reason.to_string(),
        }
    }
}
