//! Generalized parking functions: counting, sum/area statistics, factorial
//! moments and their closed forms, the bijection with labelled rooted
//! forests, and distribution export.
//!
//! An a-parking function of length n is a vector in {1..}^n whose sorted
//! version satisfies p_(i) <= a + i - 1. Counting obeys the fundamental
//! recurrence p(n,a) = sum_k C(n,k) p(n-k, a+k-1) with p(0,a) = 1 and
//! p(n,0) = 0, giving p(n,a) = a(a+n)^{n-1}.

use std::collections::{BTreeMap, HashMap, VecDeque};

use emx_core::scalar::{binomial, factorial, pow, q, qi, scalar_to_f64, ExactScalar};
use emx_core::Poly;
use emx_guess::{ansatz_fit, BasisFn, GuessError};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParkingError {
    #[error("brute-force enumeration too large: {0} candidate vectors exceed the cap {ENUMERATION_CAP}")]
    CapExceeded(u128),
    #[error("not a valid {a}-parking function")]
    InvalidParking { a: u64 },
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("moment fit failed: {0}; try wider ranges or larger degree bounds")]
    Fit(GuessError),
    #[error("factorial moments are gated at k <= {MAX_MOMENT}, requested {0}")]
    MomentTooHigh(usize),
}

pub const ENUMERATION_CAP: u128 = 10_000_000;
pub const MAX_MOMENT: usize = 5;

/// Sorted-version test: p_(i) <= a + i - 1.
pub fn is_a_parking(p: &[u64], a: u64) -> bool {
    let mut s = p.to_vec();
    s.sort_unstable();
    s.iter()
        .enumerate()
        .all(|(i, &v)| v >= 1 && v <= a + i as u64)
}

/// p(n,a) by the fundamental recurrence (memoized).
pub fn count_parking(n: u64, a: u64) -> BigInt {
    fn go(n: u64, a: u64, memo: &mut HashMap<(u64, u64), BigInt>) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        if a == 0 {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(n, a)) {
            return v.clone();
        }
        let mut acc = BigInt::zero();
        for k in 0..=n {
            acc += binomial(n, k) * go(n - k, a + k - 1, memo);
        }
        memo.insert((n, a), acc.clone());
        acc
    }
    go(n, a, &mut HashMap::new())
}

/// The closed form a(a+n)^{n-1}; equals count_parking (n=0 gives 1).
pub fn count_closed(n: u64, a: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    BigInt::from(a) * num_traits::pow(BigInt::from(a + n), (n - 1) as usize)
}

/// All a-parking functions of length n by filtering {1..a+n-1}^n.
pub fn enumerate_parking(n: u64, a: u64) -> Result<Vec<Vec<u64>>, ParkingError> {
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    if a == 0 {
        return Ok(vec![]);
    }
    let base = a + n - 1;
    let total = (base as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if total > ENUMERATION_CAP {
        return Err(ParkingError::CapExceeded(total));
    }
    let mut out = Vec::new();
    let mut v = vec![1u64; n as usize];
    loop {
        if is_a_parking(&v, a) {
            out.push(v.clone());
        }
        // odometer over {1..base}^n
        let mut i = v.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if v[i] < base {
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Statistic {
    Sum,
    Area,
}

/// Weighted count: coefficient of x^s = number of a-parking functions with
/// statistic value s.
pub type StatPoly = Poly<BigInt>;

fn sum_gf_memo(n: u64, a: u64, memo: &mut HashMap<(u64, u64), StatPoly>) -> StatPoly {
    if n == 0 {
        return Poly::one();
    }
    if a == 0 {
        return Poly::zero();
    }
    if let Some(p) = memo.get(&(n, a)) {
        return p.clone();
    }
    // P(n,a)(x) = x^n sum_k C(n,k) P(n-k, a+k-1)(x)
    let mut acc: StatPoly = Poly::zero();
    for k in 0..=n {
        let child = sum_gf_memo(n - k, a + k - 1, memo);
        acc = acc.add(&child.scale(&binomial(n, k)));
    }
    let res = acc.shift_up(n as usize);
    memo.insert((n, a), res.clone());
    res
}

fn area_gf_memo(n: u64, a: u64, memo: &mut HashMap<(u64, u64), StatPoly>) -> StatPoly {
    if n == 0 {
        return Poly::one();
    }
    if a == 0 {
        return Poly::zero();
    }
    if let Some(p) = memo.get(&(n, a)) {
        return p.clone();
    }
    // Q(n,a)(x) = sum_k C(n,k) x^{k(k+2a-3)/2} Q(n-k, a+k-1)(x)
    let mut acc: StatPoly = Poly::zero();
    for k in 0..=n {
        let child = area_gf_memo(n - k, a + k - 1, memo);
        let e = (k as i64 * (k as i64 + 2 * a as i64 - 3) / 2) as usize;
        acc = acc.add(&child.scale(&binomial(n, k)).shift_up(e));
    }
    memo.insert((n, a), acc.clone());
    acc
}

/// P(n,a)(x) = sum over a-parking functions of x^{Sum(p)}.
pub fn sum_gf(n: u64, a: u64) -> StatPoly {
    sum_gf_memo(n, a, &mut HashMap::new())
}

/// Q(n,a)(x) = sum over a-parking functions of x^{Area(p)}, where
/// Area(p) = n(2a+n-1)/2 - Sum(p).
pub fn area_gf(n: u64, a: u64) -> StatPoly {
    area_gf_memo(n, a, &mut HashMap::new())
}

/// The reflection x^{(2a+n-1)n/2} P(1/x) applied to a statistic polynomial.
pub fn reflect(p: &StatPoly, n: u64, a: u64) -> StatPoly {
    let top = ((2 * a + n - 1) * n / 2) as usize;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (s, c) in p.coeffs().iter().enumerate() {
        coeffs[top - s] = c.clone();
    }
    Poly::new(coeffs)
}

/// E_sum(n,a) = n(a+n+1)/2 - (1/2) sum_{j=1..n} n!/((n-j)! (a+n)^{j-1}).
pub fn expectation_sum(n: u64, a: u64) -> ExactScalar {
    let head = ExactScalar::from(BigInt::from(n) * BigInt::from(a + n + 1)) / qi(2);
    head - falling_sum(n, a) / qi(2)
}

/// E_area(n,a) = n(a-2)/2 + (1/2) sum_{j=1..n} n!/((n-j)! (a+n)^{j-1}).
pub fn e_area(n: u64, a: u64) -> ExactScalar {
    let head = ExactScalar::from(BigInt::from(n) * (BigInt::from(a) - 2)) / qi(2);
    head + falling_sum(n, a) / qi(2)
}

/// sum_{j=1..n} n!/((n-j)! (a+n)^{j-1}) over the common denominator (a+n)^{n-1}.
fn falling_sum(n: u64, a: u64) -> ExactScalar {
    if n == 0 {
        return qi(0);
    }
    let b = BigInt::from(a + n);
    // numerator: sum_j ff(n,j) (a+n)^{n-j}, denominator (a+n)^{n-1}
    let mut ff = BigInt::one();
    let mut pw = num_traits::pow(b.clone(), (n - 1) as usize);
    let denom = pw.clone();
    let mut acc = BigInt::zero();
    for j in 1..=n {
        ff *= BigInt::from(n - j + 1);
        acc += &ff * &pw; // ff(n,j) * (a+n)^(n-j)
        pw /= &b;
    }
    ExactScalar::new(acc, denom)
}

/// W_n = n!/n^{n-1} sum_{k=0..n-2} n^k/k!, the Riordan-Sloane expectation of
/// total height over rooted labelled trees on n vertices (W_1 = 0).
pub fn w_value(n: u64) -> ExactScalar {
    if n <= 1 {
        return qi(0);
    }
    let b = BigInt::from(n);
    // sum_k n^k/k! = (sum_k n^k (n-2)!/k!) / (n-2)!
    let mut acc = BigInt::zero();
    let mut term = factorial(n - 2); // n^0 (n-2)!/0!
    for k in 0..=n - 2 {
        acc += &term;
        term = term * &b / BigInt::from(k + 1);
    }
    ExactScalar::new(factorial(n) * acc, num_traits::pow(b, (n - 1) as usize) * factorial(n - 2))
}

/// k-th factorial moment of the area statistic:
/// E_k(n,a) = Q^{(k)}(n,a)(1) / (a(a+n)^{n-1}).
pub fn factorial_moment(k: usize, n: u64, a: u64) -> Result<ExactScalar, ParkingError> {
    if k > MAX_MOMENT {
        return Err(ParkingError::MomentTooHigh(k));
    }
    let gf = area_gf(n, a);
    Ok(factorial_moment_of(&gf, k))
}

/// k-th factorial moment of a statistic polynomial (derivatives at x = 1
/// taken exactly on coefficients).
pub fn factorial_moment_of(gf: &StatPoly, k: usize) -> ExactScalar {
    let mut deriv = BigInt::zero();
    let mut total = BigInt::zero();
    for (s, c) in gf.coeffs().iter().enumerate() {
        total += c;
        let mut ff = BigInt::one();
        for i in 0..k {
            if s < i + 1 {
                ff = BigInt::zero();
                break;
            }
            ff *= BigInt::from((s - i) as u64);
        }
        deriv += ff * c;
    }
    ExactScalar::new(deriv, total)
}

/// Known closed forms E_k(n) = A_k(n) + B_k(n) E_1(n) for the area statistic
/// on classical (a = 1) parking functions, k <= 5.
pub fn area_moment_closed_form(k: usize, n: u64) -> Option<ExactScalar> {
    let e1 = e_area(n, 1);
    let nn = qi(n as i64);
    let pv = |cs: &[ExactScalar]| Poly::new(cs.to_vec()).eval(&nn);
    Some(match k {
        1 => e1,
        2 => pv(&[qi(0), q(-1, 3), q(-1, 12), q(5, 12)]) + pv(&[q(-7, 3), q(-7, 3)]) * e1,
        3 => {
            pv(&[qi(0), q(259, 192), q(199, 192), q(-283, 192), q(-175, 192)])
                + pv(&[q(743, 96), q(1219, 96), q(521, 96), q(15, 32)]) * e1
        }
        4 => {
            pv(&[
                qi(0),
                q(-187463, 30240),
                q(-1375, 189),
                q(22217, 5040),
                q(101897, 15120),
                q(63737, 30240),
                q(221, 1008),
            ]) + pv(&[
                q(-503803, 15120),
                q(-7409, 105),
                q(-130243, 2520),
                q(-449, 27),
                q(-35, 16),
            ]) * e1
        }
        5 => {
            pv(&[
                qi(0),
                q(392763901, 11612160),
                q(24676991, 483840),
                q(-94846903, 11612160),
                q(-30773609, 725760),
                q(-99955651, 3870720),
                q(-2170159, 290304),
                q(-105845, 110592),
            ]) + pv(&[
                q(1024580441, 5806080),
                q(159943787, 362880),
                q(826358527, 1935360),
                q(1111349, 5184),
                q(9832585, 165888),
                q(1005, 128),
                q(565, 2048),
            ]) * e1
        }
        _ => return None,
    })
}

/// Fit E_k(n,a) = A_k(n,a) + B_k(n,a) E_1(n,a) with polynomial unknowns of
/// degree <= 2k in n and <= min(2k, #a - 1) in a. Points with n < 3 are
/// dropped (the small cases are degenerate for the ansatz). Returns the
/// nonzero coefficients keyed by monomial name.
pub fn fit_moment_expression(
    k: usize,
    a_values: &[u64],
    n_values: &[u64],
) -> Result<BTreeMap<String, ExactScalar>, ParkingError> {
    if k > MAX_MOMENT {
        return Err(ParkingError::MomentTooHigh(k));
    }
    let points: Vec<(u64, u64)> = n_values
        .iter()
        .filter(|&&n| n >= 3)
        .flat_map(|&n| a_values.iter().map(move |&a| (n, a)))
        .collect();
    let mut data = Vec::with_capacity(points.len());
    let mut e1s = Vec::with_capacity(points.len());
    let mut memo = HashMap::new();
    for &(n, a) in &points {
        let gf = area_gf_memo(n, a, &mut memo);
        data.push((data.len() as i64, factorial_moment_of(&gf, k)));
        e1s.push(e_area(n, a));
    }
    let deg_n = 2 * k as u32;
    let deg_a = (2 * k as u32).min(a_values.len() as u32 - 1);
    let mut basis = Vec::new();
    for with_e1 in [false, true] {
        for i in 0..=deg_n {
            for j in 0..=deg_a {
                let pts = points.clone();
                let e1s = e1s.clone();
                let mut parts = Vec::new();
                match i {
                    0 => {}
                    1 => parts.push("n".to_string()),
                    _ => parts.push(format!("n^{}", i)),
                }
                match j {
                    0 => {}
                    1 => parts.push("a".to_string()),
                    _ => parts.push(format!("a^{}", j)),
                }
                if with_e1 {
                    parts.push("E1".to_string());
                }
                let name = if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                };
                basis.push(BasisFn::new(name, move |t| {
                    let (n, a) = pts[t as usize];
                    let mut v = pow(&qi(n as i64), i) * pow(&qi(a as i64), j);
                    if with_e1 {
                        v *= &e1s[t as usize];
                    }
                    v
                }));
            }
        }
    }
    let fit = ansatz_fit(&data, &basis, 0).map_err(ParkingError::Fit)?;
    Ok(fit
        .into_iter()
        .filter(|(_, c)| !Zero::is_zero(c))
        .collect())
}

/// Labelled rooted forest with roots 1..a and non-root vertices a+1..a+n;
/// parent maps each non-root to its parent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledForest {
    pub a: u64,
    pub n: u64,
    pub parent: BTreeMap<u64, u64>,
}

impl LabeledForest {
    pub fn validate(&self) -> Result<(), ParkingError> {
        let lo = self.a + 1;
        let hi = self.a + self.n;
        for v in lo..=hi {
            let mut cur = v;
            let mut steps = 0;
            loop {
                if cur <= self.a {
                    break; // reached a root
                }
                let p = *self
                    .parent
                    .get(&cur)
                    .ok_or_else(|| ParkingError::InvalidForest(format!("vertex {cur} has no parent")))?;
                if p > hi {
                    return Err(ParkingError::InvalidForest(format!(
                        "parent {p} of vertex {cur} out of range"
                    )));
                }
                cur = p;
                steps += 1;
                if steps > self.n {
                    return Err(ParkingError::InvalidForest(format!(
                        "cycle through vertex {v}"
                    )));
                }
            }
        }
        if self.parent.len() as u64 != self.n {
            return Err(ParkingError::InvalidForest(
                "parent map size does not match n".into(),
            ));
        }
        Ok(())
    }
}

/// The two-line-array bijection: sort the array by parking value (ties by
/// vertex ascending), read the weakly-increasing version as a forest where
/// vertex a+i's parent is the i-th sorted value, then relabel through the
/// comparison map between the two first lines.
pub fn parking_to_forest(p: &[u64], a: u64) -> Result<LabeledForest, ParkingError> {
    if !is_a_parking(p, a) {
        return Err(ParkingError::InvalidParking { a });
    }
    let n = p.len() as u64;
    // pairs (vertex, value); stable sort by value keeps ties vertex-ascending
    let mut pairs: Vec<(u64, u64)> = p
        .iter()
        .enumerate()
        .map(|(i, &v)| (a + 1 + i as u64, v))
        .collect();
    pairs.sort_by_key(|&(_, v)| v);
    // sigma: i-th vertex of the sorted version maps to the i-th permuted vertex
    let sigma = |w: u64| -> u64 {
        if w <= a {
            w
        } else {
            pairs[(w - a - 1) as usize].0
        }
    };
    let mut parent = BTreeMap::new();
    for (i, &(_, value)) in pairs.iter().enumerate() {
        // in the sorted forest, vertex a+1+i has parent `value`
        parent.insert(sigma(a + 1 + i as u64), sigma(value));
    }
    let f = LabeledForest { a, n, parent };
    f.validate()?;
    Ok(f)
}

/// Inverse bijection: index vertices in level order (roots 1..a first, then
/// children of each indexed vertex in increasing label order); the parking
/// value of vertex v is the index of its parent.
pub fn forest_to_parking(f: &LabeledForest) -> Result<Vec<u64>, ParkingError> {
    f.validate()?;
    let mut children: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (&v, &p) in &f.parent {
        children.entry(p).or_default().push(v);
    }
    // BTreeMap iteration plus sorted insertion keeps children ascending
    let mut index: BTreeMap<u64, u64> = BTreeMap::new();
    let mut queue: VecDeque<u64> = (1..=f.a).collect();
    let mut next = 1u64;
    while let Some(v) = queue.pop_front() {
        index.insert(v, next);
        next += 1;
        if let Some(cs) = children.get(&v) {
            queue.extend(cs.iter().copied());
        }
    }
    let mut p = Vec::with_capacity(f.n as usize);
    for v in f.a + 1..=f.a + f.n {
        p.push(index[&f.parent[&v]]);
    }
    Ok(p)
}

/// Raw histogram rows (area, count) and scaled rows (z, density) where
/// z = (area - mean)/stddev and density integrates to one against the
/// 1/stddev spacing of consecutive areas.
pub fn distribution_export(n: u64, a: u64) -> (Vec<(u64, BigInt)>, Vec<(f64, f64)>) {
    let gf = area_gf(n, a);
    let rows: Vec<(u64, BigInt)> = gf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(s, c)| (s as u64, c.clone()))
        .collect();
    let total: BigInt = rows.iter().map(|(_, c)| c).sum();
    let e1 = factorial_moment_of(&gf, 1);
    let e2 = factorial_moment_of(&gf, 2);
    let var = &e2 + &e1 - &e1 * &e1;
    let mean = scalar_to_f64(&e1);
    let std = scalar_to_f64(&var).sqrt();
    let totf = total.to_f64().unwrap_or(f64::MAX);
    let scaled = rows
        .iter()
        .map(|(s, c)| {
            let z = (*s as f64 - mean) / std.max(f64::MIN_POSITIVE);
            (z, c.to_f64().unwrap_or(0.0) / totf * std)
        })
        .collect();
    (rows, scaled)
}
