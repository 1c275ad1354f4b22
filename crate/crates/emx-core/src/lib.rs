//! Exact-arithmetic substrate: arbitrary-precision rationals, dense generic
//! polynomials, canonical rational functions, and exact linear algebra
//! (Bareiss determinants, Ryser permanents, solve, nullspace).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

pub mod error;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod ring;
pub mod scalar;

pub use error::CoreError;
pub use matrix::{Mat, SolveOutcome};
pub use poly::Poly;
pub use ratfun::{RatFun, RatQ, RatQ2};
pub use ring::{Field, IntegralDomain, Ring};
pub use scalar::ExactScalar;
