//! Exact fitting of sequences against ansatz bases built from powers of n
//! and generalized harmonic numbers.

use emx_core::matrix::SolveOutcome;
use emx_core::scalar::{harmonic, pow, qi, ExactScalar};
use emx_core::Mat;
use std::sync::Arc;

use crate::GuessError;

/// A named basis function of n with exact rational values.
#[derive(Clone)]
pub struct BasisFn {
    pub name: String,
    f: Arc<dyn Fn(i64) -> ExactScalar + Send + Sync>,
}

impl BasisFn {
    pub fn new(name: impl Into<String>, f: impl Fn(i64) -> ExactScalar + Send + Sync + 'static) -> Self {
        BasisFn {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    /// The monomial n^i * prod_k H_k(n)^{e_k}.
    pub fn monomial(i: u32, hs: &[(u32, u32)]) -> Self {
        let hs_owned: Vec<(u32, u32)> = hs.to_vec();
        let mut parts = Vec::new();
        match i {
            0 => {}
            1 => parts.push("n".to_string()),
            _ => parts.push(format!("n^{}", i)),
        }
        for &(k, e) in &hs_owned {
            if e == 1 {
                parts.push(format!("H{}", k));
            } else if e > 1 {
                parts.push(format!("H{}^{}", k, e));
            }
        }
        let name = if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        };
        BasisFn::new(name, move |n| {
            assert!(n >= 0, "harmonic basis needs n >= 0");
            let mut acc = pow(&qi(n), i);
            for &(k, e) in &hs_owned {
                acc *= pow(&harmonic(k, n as u64), e);
            }
            acc
        })
    }

    pub fn eval(&self, n: i64) -> ExactScalar {
        (self.f)(n)
    }
}

impl std::fmt::Debug for BasisFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BasisFn({})", self.name)
    }
}

/// Default basis for moment order r: all n^i * prod H_k^{e_k} with
/// i <= r+1, sum of harmonic exponents <= 2, harmonic indices k <= r.
/// This spans every harmonic-number closed form used for the sorting and
/// parking moment theorems.
pub fn default_basis(r: u32) -> Vec<BasisFn> {
    let r = r.max(1);
    let mut hparts: Vec<Vec<(u32, u32)>> = vec![vec![]];
    for k in 1..=r {
        hparts.push(vec![(k, 1)]);
        hparts.push(vec![(k, 2)]);
        for l in k + 1..=r {
            hparts.push(vec![(k, 1), (l, 1)]);
        }
    }
    let mut out = Vec::new();
    for i in 0..=r + 1 {
        for hs in &hparts {
            out.push(BasisFn::monomial(i, hs));
        }
    }
    out
}

/// Exact fit of the data against the basis, skipping the first `skip` points.
/// The fit must hold exactly on every non-skipped point (the system includes
/// at least 3 more equations than unknowns). Returns (name, coefficient)
/// pairs in basis order.
pub fn ansatz_fit(
    data: &[(i64, ExactScalar)],
    basis: &[BasisFn],
    skip: usize,
) -> Result<Vec<(String, ExactScalar)>, GuessError> {
    let pts = &data[skip.min(data.len())..];
    if pts.len() < basis.len() + 3 {
        return Err(GuessError::InsufficientData {
            required: basis.len() + 3 + skip,
        });
    }
    let a = Mat::from_fn(pts.len(), basis.len(), |r, c| basis[c].eval(pts[r].0));
    let b: Vec<ExactScalar> = pts.iter().map(|(_, v)| v.clone()).collect();
    match a.solve_linear(&b).map_err(|_| GuessError::Fail)? {
        SolveOutcome::Unique(x) => Ok(basis
            .iter()
            .zip(x)
            .map(|(bf, c)| (bf.name.clone(), c))
            .collect()),
        _ => Err(GuessError::Fail),
    }
}

/// Evaluate a fitted coefficient map at n.
pub fn eval_fit(fit: &[(String, ExactScalar)], basis: &[BasisFn], n: i64) -> ExactScalar {
    let mut acc = ExactScalar::from(num_bigint::BigInt::from(0));
    for ((_, c), bf) in fit.iter().zip(basis) {
        acc += c * bf.eval(n);
    }
    acc
}
