//! Exact arbitrary-precision rational scalars plus small integer utilities
//! (binomials, factorials) used throughout the counting code.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::CoreError;

/// Arbitrary-precision rational in lowest terms with positive denominator.
/// `num_rational::BigRational` maintains exactly these invariants.
pub type ExactScalar = BigRational;

/// `n/d` as an exact scalar.
pub fn q(n: i64, d: i64) -> ExactScalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact scalar.
pub fn qi(n: i64) -> ExactScalar {
    BigRational::from(BigInt::from(n))
}

/// Basic arithmetic dispatch used by the CLI layer.
pub fn scalar_arith(a: &ExactScalar, b: &ExactScalar, op: &str) -> Result<ExactScalar, CoreError> {
    match op {
        "add" => Ok(a + b),
        "sub" => Ok(a - b),
        "mul" => Ok(a * b),
        "div" => {
            if b.is_zero() {
                Err(CoreError::DivisionByZero)
            } else {
                Ok(a / b)
            }
        }
        other => Err(CoreError::UnknownOp(other.to_string())),
    }
}

/// Render as `p` or `p/q` (decimal).
pub fn scalar_to_string(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn scalar_from_str(s: &str) -> Result<ExactScalar, CoreError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| CoreError::Parse(s.to_string()))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| CoreError::Parse(s.to_string()))?;
    if d.is_zero() {
        return Err(CoreError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Nearest f64 (used only at output boundaries).
pub fn scalar_to_f64(x: &ExactScalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled quotient for very large operands.
        let digits = |v: &BigInt| v.to_string().len() as i32;
        let shift = (digits(x.numer()).max(digits(x.denom())) - 300).max(0) as u32;
        let scale = BigInt::from(10u32).pow(shift);
        let n = (x.numer() / &scale).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() / &scale).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Generalized harmonic number H_k(n) = sum_{i=1..n} 1/i^k.
pub fn harmonic(k: u32, n: u64) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for i in 1..=n {
        acc += BigRational::new(BigInt::one(), BigInt::from(i).pow(k));
    }
    acc
}

/// Integer power of a scalar (non-negative exponent).
pub fn pow(x: &ExactScalar, e: u32) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Sign of a big integer as -1, 0, 1.
pub fn int_sign(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
