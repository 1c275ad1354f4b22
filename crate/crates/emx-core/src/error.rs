//! Error type for the exact-arithmetic and linear-algebra layer.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoreError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
    #[error("cannot parse `{0}` as an exact rational")]
    Parse(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("permanent dimension {0} exceeds cap {1}; truncate the sequence instead")]
    PermanentTooLarge(usize, usize),
    #[error("rational function has a pole at the origin (denominator constant term is zero)")]
    PoleAtOrigin,
}
