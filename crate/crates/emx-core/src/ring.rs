//! Minimal ring/field abstractions shared by the polynomial and matrix code.
//!
//! Everything downstream is generic over these traits so the same elimination
//! and guessing routines run over integers, rationals, polynomials in `v`,
//! and rational functions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;

/// Commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_i64(v: i64) -> Self;
}

/// Ring in which division is exact whenever it is performed.
///
/// `exact_div` may assume the divisor divides `self`; Bareiss elimination
/// guarantees this for its interior divisions.
pub trait IntegralDomain: Ring {
    fn exact_div(&self, other: &Self) -> Self;
}

/// Field: every nonzero element is invertible.
pub trait Field: IntegralDomain {
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl IntegralDomain for BigInt {
    fn exact_div(&self, other: &Self) -> Self {
        debug_assert!(!Zero::is_zero(other) && (self % other).abs() == BigInt::from(0));
        self / other
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        ExactScalar::from(BigInt::from(v))
    }
}

impl IntegralDomain for ExactScalar {
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Field for ExactScalar {
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}
