use thiserror::Error;

use crate::words::CancellationViolation;

/// Errors raised by the library operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("exponent zero at column {pos}")]
    ZeroExponent { pos: usize },

    #[error("alphabet mismatch: {0}")]
    Alphabet(String),

    #[error("vector {0} has an odd coordinate and cannot be halved in Z^o")]
    Half(String),

    #[error("word `{0}` is not reduced")]
    Unreduced(String),

    #[error("position {pos} out of range for word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("malformed cancellation: {0}")]
    MalformedCancellation(String),

    #[error("invalid cancellation: {0}")]
    InvalidCancellation(CancellationViolation),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("non-canonical triple: {0}")]
    NonCanonical(String),

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(String),

    #[error("ball would contain {needed} vertices, cap is {cap}")]
    ResourceGuard { needed: u128, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
