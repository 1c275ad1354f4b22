//! C-finite recurrence guessing and rational generating functions.
//!
//! Works over any coefficient field with canonical rational-function forms,
//! so the same code fits integer sequences (field = exact rationals) and
//! sequences of polynomials in `v` (field = rational functions in `v`).

use emx_core::matrix::SolveOutcome;
use emx_core::ratfun::CanonField;
use emx_core::{Mat, Poly, RatFun};

use crate::GuessError;

/// A linear recurrence with constant coefficients plus initial values:
/// L[n] = sum_{i=1..d} coeffs[i-1] * L[n-i], seeded by `initial`.
#[derive(Clone, PartialEq, Debug)]
pub struct CFiniteSpec<K: CanonField> {
    pub initial: Vec<K>,
    pub coeffs: Vec<K>,
}

impl<K: CanonField> CFiniteSpec<K> {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }
}

/// Look for a recurrence of exactly order `d`. The data must contain at
/// least 2d+3 terms so the fit is overdetermined.
pub fn guess_rec1<K: CanonField>(l: &[K], d: usize) -> Result<CFiniteSpec<K>, GuessError> {
    guess_rec1_opts(l, d, false)
}

/// As `guess_rec1`, optionally constraining the characteristic denominator
/// D(t) = 1 - sum coeffs[i] t^i to be palindromic (so coeffs[d] = -1 and
/// coeffs[i] = coeffs[d-i]), roughly halving the unknowns and the data needed.
pub fn guess_rec1_opts<K: CanonField>(
    l: &[K],
    d: usize,
    symmetric: bool,
) -> Result<CFiniteSpec<K>, GuessError> {
    assert!(d >= 1);
    let unknowns = if symmetric { d / 2 } else { d };
    let needed = if symmetric { d + unknowns + 3 } else { 2 * d + 3 };
    if l.len() < needed {
        return Err(GuessError::TooShort {
            needed,
            got: l.len(),
        });
    }
    let rows = l.len() - d;
    let a = Mat::from_fn(rows, unknowns, |r, c| {
        let n = d + r;
        if symmetric {
            // unknown c (1-based j = c+1) couples lags j and d-j
            let j = c + 1;
            if j == d - j {
                l[n - j].clone()
            } else {
                l[n - j].add(&l[n - (d - j)])
            }
        } else {
            l[n - (c + 1)].clone()
        }
    });
    let b: Vec<K> = (0..rows)
        .map(|r| {
            let n = d + r;
            if symmetric {
                // palindromy pins coeffs[d] = -1; move that term to the rhs
                l[n].add(&l[n - d])
            } else {
                l[n].clone()
            }
        })
        .collect();
    match a.solve_linear(&b).map_err(|_| GuessError::Fail)? {
        SolveOutcome::Unique(x) => {
            let coeffs: Vec<K> = if symmetric {
                (1..=d)
                    .map(|i| {
                        if i == d {
                            K::one().neg()
                        } else {
                            x[i.min(d - i) - 1].clone()
                        }
                    })
                    .collect()
            } else {
                x
            };
            Ok(CFiniteSpec {
                initial: l[..d].to_vec(),
                coeffs,
            })
        }
        _ => Err(GuessError::Fail),
    }
}

/// Minimal-order C-finite guess: first success of `guess_rec1` for
/// d = 1 .. floor(|L|/2) - 2.
pub fn guess_rec<K: CanonField>(l: &[K]) -> Result<CFiniteSpec<K>, GuessError> {
    guess_rec_opts(l, false)
}

pub fn guess_rec_opts<K: CanonField>(
    l: &[K],
    symmetric: bool,
) -> Result<CFiniteSpec<K>, GuessError> {
    if l.len() < 7 {
        return Err(GuessError::TooShort {
            needed: 7,
            got: l.len(),
        });
    }
    let dmax = l.len() / 2 - 2;
    for d in 1..=dmax {
        if let Ok(spec) = guess_rec1_opts(l, d, symmetric) {
            return Ok(spec);
        }
    }
    Err(GuessError::Fail)
}

/// First `n` terms generated from the recurrence.
pub fn seq_from_rec<K: CanonField>(s: &CFiniteSpec<K>, n: usize) -> Vec<K> {
    let d = s.order();
    let mut out: Vec<K> = s.initial.iter().take(n).cloned().collect();
    while out.len() < n {
        let k = out.len();
        let mut acc = K::zero();
        for i in 1..=d {
            acc = acc.add(&s.coeffs[i - 1].mul(&out[k - i]));
        }
        out.push(acc);
    }
    out
}

/// Rational generating function sum_{n>=0} L[n] t^n of the C-finite sequence.
///
/// Denominator D = 1 - sum coeffs[i] t^(i+1); numerator is the truncation of
/// D * (sum initial[i] t^i) below degree d. Self-verifies against the
/// recurrence over deg(D)+10 terms.
pub fn c_to_r<K: CanonField>(s: &CFiniteSpec<K>) -> Result<RatFun<K>, GuessError> {
    let d = s.order();
    let mut den = vec![K::one()];
    for c in &s.coeffs {
        den.push(c.neg());
    }
    let den = Poly::new(den);
    let init = Poly::new(s.initial.clone());
    let num = den.mul(&init).truncated(d);
    let f = RatFun::new(num, den.clone());
    let window = den.degree().unwrap_or(0) + 10;
    let series = f.series_coeffs(window).map_err(|_| GuessError::Fail)?;
    if series != seq_from_rec(s, window) {
        return Err(GuessError::VerifyFailed);
    }
    Ok(f)
}

/// As `c_to_r` but with the first sequence entry placed at t^offset
/// (sequences indexed from n = 1 use offset 1).
pub fn c_to_r_offset<K: CanonField>(
    s: &CFiniteSpec<K>,
    offset: usize,
) -> Result<RatFun<K>, GuessError> {
    let f = c_to_r(s)?;
    let shift = RatFun::from_poly(Poly::monomial(K::one(), offset));
    Ok(f.mul(&shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use emx_core::scalar::{qi, ExactScalar};
    use emx_core::RatQ;

    fn sq(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&x| qi(x)).collect()
    }

    fn p(v: &[i64]) -> Poly<ExactScalar> {
        Poly::new(v.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn guess_rec1_examples() {
        let ones = sq(&[1, 1, 1, 1, 1, 1]);
        let s = guess_rec1(&ones, 1).unwrap();
        assert_eq!(s.initial, sq(&[1]));
        assert_eq!(s.coeffs, sq(&[1]));

        let grid = sq(&[1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]);
        let s = guess_rec1(&grid, 2).unwrap();
        assert_eq!(s.initial, sq(&[1, 4]));
        assert_eq!(s.coeffs, sq(&[4, -1]));

        let bad = sq(&[1, 2, 4, 8, 16, 17, 1]);
        assert_eq!(guess_rec1(&bad, 1), Err(GuessError::Fail));
        assert!(matches!(
            guess_rec1(&sq(&[1, 2, 3]), 2),
            Err(GuessError::TooShort { .. })
        ));
    }

    #[test]
    fn guess_rec_minimal_order() {
        let grid = sq(&[1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]);
        let s = guess_rec(&grid).unwrap();
        assert_eq!((s.initial, s.coeffs), (sq(&[1, 4]), sq(&[4, -1])));

        let fib = sq(&[1, 1, 2, 3, 5, 8, 13, 21]);
        let s = guess_rec(&fib).unwrap();
        assert_eq!((s.initial, s.coeffs), (sq(&[1, 1]), sq(&[1, 1])));

        let geo = sq(&[1, 2, 4, 8, 16, 32, 64, 128]);
        let s = guess_rec(&geo).unwrap();
        assert_eq!((s.initial, s.coeffs), (sq(&[1]), sq(&[2])));
    }

    #[test]
    fn symmetric_option_agrees() {
        let grid = sq(&[1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]);
        let s = guess_rec_opts(&grid, true).unwrap();
        assert_eq!(s.coeffs, sq(&[4, -1]));
        assert_eq!(s.order(), 2);
        assert_eq!(seq_from_rec(&s, 10), grid);
        // the symmetric fit needs fewer terms than the unconstrained one
        assert!(guess_rec1_opts(&grid[..6], 2, true).is_ok());
        assert!(guess_rec1(&grid[..6], 2).is_err());
    }

    #[test]
    fn seq_from_rec_examples() {
        let s = CFiniteSpec {
            initial: sq(&[1, 4]),
            coeffs: sq(&[4, -1]),
        };
        assert_eq!(seq_from_rec(&s, 6), sq(&[1, 4, 15, 56, 209, 780]));
        let ones = CFiniteSpec {
            initial: sq(&[1]),
            coeffs: sq(&[1]),
        };
        assert_eq!(seq_from_rec(&ones, 4), sq(&[1, 1, 1, 1]));
        let fib = CFiniteSpec {
            initial: sq(&[0, 1]),
            coeffs: sq(&[1, 1]),
        };
        assert_eq!(seq_from_rec(&fib, 7), sq(&[0, 1, 1, 2, 3, 5, 8]));
    }

    #[test]
    fn c_to_r_examples() {
        let fib = CFiniteSpec {
            initial: sq(&[1, 1]),
            coeffs: sq(&[1, 1]),
        };
        let f = c_to_r(&fib).unwrap();
        assert_eq!(f, RatQ::new(p(&[1]), p(&[1, -1, -1])));

        let grid = CFiniteSpec {
            initial: sq(&[1, 4]),
            coeffs: sq(&[4, -1]),
        };
        let f = c_to_r_offset(&grid, 1).unwrap();
        assert_eq!(f, RatQ::new(p(&[0, 1]), p(&[1, -4, 1])));

        let geo = CFiniteSpec {
            initial: sq(&[7]),
            coeffs: sq(&[1]),
        };
        assert_eq!(c_to_r(&geo).unwrap(), RatQ::new(p(&[7]), p(&[1, -1])));
    }
}
