//! Sequence fitting: constant-coefficient (C-finite) recurrences, rational
//! generating functions, polynomial-coefficient recurrences, and exact fits
//! against harmonic-number ansatz bases.

pub mod ansatz;
pub mod cfinite;
pub mod holonomic;

pub use ansatz::{ansatz_fit, default_basis, BasisFn};
pub use cfinite::{
    c_to_r, c_to_r_offset, guess_rec, guess_rec1, guess_rec1_opts, guess_rec_opts, seq_from_rec,
    CFiniteSpec,
};
pub use holonomic::{find_rec, PRecurrence};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GuessError {
    #[error("sequence too short: need at least {needed} terms, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("no recurrence of the requested shape fits the data")]
    Fail,
    #[error("insufficient data: at least {required} terms are required")]
    InsufficientData { required: usize },
    #[error("candidate failed verification on held-out terms")]
    VerifyFailed,
}
