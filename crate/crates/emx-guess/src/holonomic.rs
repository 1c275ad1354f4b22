//! Polynomial-coefficient (P-recursive) recurrence discovery.
//!
//! `find_rec` searches splits (order, degree) with order + degree <= MaxC,
//! minimal order first, then minimal degree. A split is accepted when the
//! homogeneous system has a one-dimensional nullspace and the operator also
//! annihilates at least three held-out trailing equations.

use emx_core::poly::primitive_part;
use emx_core::scalar::{pow, qi, ExactScalar};
use emx_core::{Mat, Poly};
use num_traits::{One, Signed, Zero};

use crate::GuessError;

/// sum_{i=0..order} coeffPolys[i](n) * a(n+i) = 0 for n >= valid_from.
///
/// Normalized: integer coefficients with overall content 1 and the leading
/// coefficient polynomial's leading coefficient positive.
#[derive(Clone, PartialEq, Debug)]
pub struct PRecurrence {
    pub order: usize,
    pub coeff_polys: Vec<Poly<ExactScalar>>,
    pub valid_from: i64,
}

impl PRecurrence {
    /// Apply the operator to the data (l[idx] = a(n0 + idx)); true when every
    /// available equation evaluates to zero.
    pub fn annihilates(&self, l: &[ExactScalar], n0: i64) -> bool {
        if l.len() < self.order + 1 {
            return false;
        }
        for idx in 0..l.len() - self.order {
            let n = qi(n0 + idx as i64);
            let mut acc = <ExactScalar as Zero>::zero();
            for (i, p) in self.coeff_polys.iter().enumerate() {
                acc += p.eval(&n) * &l[idx + i];
            }
            if !Zero::is_zero(&acc) {
                return false;
            }
        }
        true
    }
}

/// Joint normalization: scale to primitive integer coefficients across all
/// coefficient polynomials, leading polynomial's leading coefficient positive.
fn normalize(polys: Vec<Poly<ExactScalar>>) -> Vec<Poly<ExactScalar>> {
    // pack every coefficient into one polynomial; only its content and
    // denominator lcm matter (trailing zeros trimmed by Poly::new are inert)
    let all: Vec<ExactScalar> = polys.iter().flat_map(|p| p.coeffs().to_vec()).collect();
    let (_, factor) = primitive_part(&Poly::new(all));
    let mut scaled: Vec<Poly<ExactScalar>> = polys
        .iter()
        .map(|p| p.scale(&factor.clone().recip()))
        .collect();
    let lead_sign = scaled
        .last()
        .and_then(|p| p.leading().cloned())
        .unwrap_or_else(<ExactScalar as One>::one);
    if lead_sign.is_negative() {
        scaled = scaled.iter().map(|p| p.neg()).collect();
    }
    scaled
}

/// Find a P-recurrence for l (l[idx] = a(n0 + idx)) with order + degree <= max_c.
pub fn find_rec(l: &[ExactScalar], n0: i64, max_c: usize) -> Result<PRecurrence, GuessError> {
    assert!(max_c >= 1);
    let mut any_attempted = false;
    let mut min_required = usize::MAX;
    for order in 1..=max_c {
        for degree in 0..=(max_c - order) {
            let unknowns = (order + 1) * (degree + 1);
            // equations available, reserving 3 for holdout verification
            let required_len = unknowns + 3 + order;
            if l.len() < required_len {
                min_required = min_required.min(required_len);
                continue;
            }
            any_attempted = true;
            let solve_rows = l.len() - order - 3;
            let a = Mat::from_fn(solve_rows, unknowns, |row, col| {
                let i = col / (degree + 1);
                let j = (col % (degree + 1)) as u32;
                pow(&qi(n0 + row as i64), j) * &l[row + i]
            });
            let basis = a.nullspace_basis();
            if basis.len() != 1 {
                continue;
            }
            let v = &basis[0];
            let polys: Vec<Poly<ExactScalar>> = (0..=order)
                .map(|i| {
                    Poly::new(v[i * (degree + 1)..(i + 1) * (degree + 1)].to_vec())
                })
                .collect();
            if polys[order].is_zero() {
                continue; // degenerate: effectively lower order
            }
            let polys = normalize(polys);
            let cand = PRecurrence {
                order,
                coeff_polys: polys,
                valid_from: n0,
            };
            // must also hold on the held-out trailing equations
            if cand.annihilates(l, n0) {
                return Ok(cand);
            }
        }
    }
    if any_attempted {
        Err(GuessError::Fail)
    } else {
        Err(GuessError::InsufficientData {
            required: min_required,
        })
    }
}
