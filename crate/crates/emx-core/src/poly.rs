//! Dense univariate polynomials over a generic coefficient ring.
//!
//! Coefficient index i holds the coefficient of x^i; the zero polynomial is
//! the empty vector and the trailing coefficient is always nonzero.
//! Bivariate objects (v, t) are `Poly<Poly<ExactScalar>>`: a polynomial in t
//! whose coefficients are polynomials in v.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{Field, IntegralDomain, Ring};
use crate::scalar::ExactScalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    /// Build from a coefficient vector (low degree first), trimming zeros.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * x^deg.
    pub fn monomial(c: R, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); deg + 1];
        v[deg] = c;
        Poly { coeffs: v }
    }

    /// x itself.
    pub fn x() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Poly::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, s: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
            .collect();
        Poly::new(v)
    }

    /// Truncate to degree < n.
    pub fn truncated(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<K: Field> Poly<K> {
    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().unwrap().inv();
        let mut rem = self.clone();
        let mut quo = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            quo[shift] = factor.clone();
            rem = rem.sub(&d.scale(&factor).shift_up(shift));
        }
        (Poly::new(quo), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let li = a.leading().unwrap().inv();
        a.scale(&li)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(R::from_i64(v))
    }
}

impl<K: Field> IntegralDomain for Poly<K> {
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.divmod(other);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

/// Scale a rational-coefficient polynomial to primitive integer coefficients.
/// Returns (primitive integer-coefficient polynomial as Poly<ExactScalar>,
/// the rational factor pulled out), so `self = factor * primitive`.
pub fn primitive_part(p: &Poly<ExactScalar>) -> (Poly<ExactScalar>, ExactScalar) {
    if p.is_zero() {
        return (Poly::zero(), <ExactScalar as One>::one());
    }
    let mut den_lcm = <BigInt as One>::one();
    for c in p.coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = <BigInt as Zero>::zero();
    for c in p.coeffs() {
        num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
    }
    if Zero::is_zero(&num_gcd) {
        num_gcd = <BigInt as One>::one();
    }
    if p.leading().unwrap().numer().is_negative() {
        num_gcd = -num_gcd;
    }
    let factor = ExactScalar::new(num_gcd.clone(), den_lcm.clone());
    let scaled = p.scale(&factor.clone().recip());
    (scaled, factor)
}

/// Pretty-print with the given variable name, high-degree terms first.
pub fn poly_to_string(p: &Poly<ExactScalar>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if Zero::is_zero(c) {
            continue;
        }
        let neg = c < &<ExactScalar as Zero>::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff_str = crate::scalar::scalar_to_string(&mag);
        match i {
            0 => out.push_str(&coeff_str),
            _ => {
                if !One::is_one(&mag) {
                    out.push_str(&coeff_str);
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn p(v: &[i64]) -> Poly<ExactScalar> {
        Poly::new(v.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn eval_examples() {
        // t^2 - 4t + 1 at t = 4
        assert_eq!(p(&[1, -4, 1]).eval(&qi(4)), qi(1));
        assert_eq!(Poly::<ExactScalar>::zero().eval(&q(7, 3)), qi(0));
        assert_eq!(p(&[1, -1, -1]).eval(&qi(0)), qi(1));
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[1, 2, 1]); // (1+t)^2
        let b = p(&[1, 1]);
        assert_eq!(a.clone(), b.mul(&b));
        let (quo, rem) = a.divmod(&b);
        assert_eq!(quo, b);
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&b), b); // monic already
    }

    #[test]
    fn derivative_and_primitive() {
        assert_eq!(p(&[1, -4, 1]).derivative(), p(&[-4, 2]));
        let g = Poly::new(vec![q(1, 2), q(3, 4)]);
        let (prim, factor) = primitive_part(&g);
        assert_eq!(prim, p(&[2, 3]));
        assert_eq!(factor, q(1, 4));
        assert_eq!(prim.scale(&factor), g);
    }

    #[test]
    fn printing() {
        assert_eq!(poly_to_string(&p(&[1, -4, 1]), "t"), "t^2 - 4*t + 1");
        assert_eq!(poly_to_string(&p(&[-1, 2, 0, 45]), "t"), "45*t^3 + 2*t - 1");
    }
}
