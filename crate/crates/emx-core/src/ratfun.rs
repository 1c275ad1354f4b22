//! Reduced rational functions (quotients of polynomials) over a field, in
//! canonical form so equality is structural equality.
//!
//! Over the rationals, the canonical form has a primitive integer-coefficient
//! denominator with positive leading coefficient (so `t/(1 - 4t + t^2)` and
//! `-1/(45t^3 - 12t^2 + 2t - 1)` print as in the literature). Over nested
//! coefficient fields the denominator is made monic instead.

use crate::error::CoreError;
use crate::poly::{poly_to_string, primitive_part, Poly};
use crate::ring::{Field, IntegralDomain, Ring};
use crate::scalar::ExactScalar;

/// Field with a canonical choice of unit for denominator normalization.
pub trait CanonField: Field {
    /// Unit u such that `den / u` is in canonical form.
    fn canonical_unit(den: &Poly<Self>) -> Self;
}

impl CanonField for ExactScalar {
    fn canonical_unit(den: &Poly<Self>) -> Self {
        let (_, factor) = primitive_part(den);
        factor
    }
}

impl<K: CanonField> CanonField for RatFun<K> {
    fn canonical_unit(den: &Poly<Self>) -> Self {
        den.leading().cloned().unwrap_or_else(Ring::one)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct RatFun<K: CanonField> {
    num: Poly<K>,
    den: Poly<K>,
}

/// Univariate rational function over the rationals.
pub type RatQ = RatFun<ExactScalar>;
/// Rational function whose coefficients are themselves rational functions
/// (e.g. in v): the bivariate generating functions live here.
pub type RatQ2 = RatFun<RatFun<ExactScalar>>;

impl<K: CanonField> RatFun<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let u = K::canonical_unit(&den);
        let ui = u.inv();
        RatFun {
            num: num.scale(&ui),
            den: den.scale(&ui),
        }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFun::new(p, Poly::one())
    }

    pub fn constant(c: K) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly<K> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatFun::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero rational function");
        RatFun::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at a point where the denominator does not vanish.
    pub fn eval(&self, x: &K) -> K {
        let d = self.den.eval(x);
        assert!(!d.is_zero(), "evaluation at a pole");
        self.num.eval(x).mul(&d.inv())
    }

    /// Apply a field homomorphism to every coefficient.
    pub fn map_coeffs<L: CanonField>(&self, f: impl Fn(&K) -> L) -> RatFun<L> {
        RatFun::new(self.num.map(&f), self.den.map(&f))
    }

    /// First N Taylor coefficients at the origin, by the linear recursion
    /// d0*a_n = num_n - sum_{i>=1} d_i*a_{n-i}.
    pub fn series_coeffs(&self, n: usize) -> Result<Vec<K>, CoreError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(CoreError::PoleAtOrigin);
        }
        let d0i = d0.inv();
        let mut out: Vec<K> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for i in 1..=k.min(self.den.degree().unwrap_or(0)) {
                acc = acc.sub(&self.den.coeff(i).mul(&out[k - i]));
            }
            out.push(acc.mul(&d0i));
        }
        Ok(out)
    }
}

impl<K: CanonField> Ring for RatFun<K> {
    fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        RatFun {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        RatFun::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        RatFun::from_poly(Poly::constant(K::from_i64(v)))
    }
}

impl<K: CanonField> IntegralDomain for RatFun<K> {
    fn exact_div(&self, other: &Self) -> Self {
        RatFun::div(self, other)
    }
}

impl<K: CanonField> Field for RatFun<K> {
    fn inv(&self) -> Self {
        RatFun::inv(self)
    }
}

/// Pretty-print a rational function over the rationals.
pub fn ratq_to_string(f: &RatQ, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let num = poly_to_string(f.numer(), var);
    if f.denom().degree() == Some(0) && f.denom().coeff(0) == ExactScalar::from_i64(1) {
        return num;
    }
    let den = poly_to_string(f.denom(), var);
    let wrap = |s: String| {
        if s.contains(' ') || s.contains('+') || s.contains('-') && !s.starts_with('-') {
            format!("({})", s)
        } else {
            s
        }
    };
    format!("{}/({})", wrap(num), den)
}
