//! Moment extraction from PGFs: raw moments by iterated t d/dt, central
//! moments, Stirling conversion from factorial moments, closed-form fitting
//! against harmonic-number bases, and scaled moments.

use emx_core::scalar::{binomial, pow, qi, scalar_to_f64, ExactScalar};
use emx_guess::{ansatz_fit, BasisFn, GuessError};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::pgf::{pgf_table, truncated_moments, Pgf, Variant};

/// Central moments m_1..m_r of the PGF's distribution, with m_1 reported as
/// the mean (the first central moment is identically zero).
pub fn moments_from_pgf(p: &Pgf, r: usize) -> Vec<ExactScalar> {
    let raws = raw_moments(&p.poly.coeffs().to_vec(), r);
    central_from_raw(&raws[1..], &raws[1]).into_iter().collect()
}

/// Raw moments E[X^l] for l = 0..r: (t d/dt)^l P(t) at t = 1.
fn raw_moments(coeffs: &[ExactScalar], r: usize) -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(r + 1);
    for l in 0..=r {
        let mut acc = qi(0);
        for (s, c) in coeffs.iter().enumerate() {
            acc += pow(&qi(s as i64), l as u32) * c;
        }
        out.push(acc);
    }
    out
}

/// Stirling numbers of the second kind S(r, j) for r, j <= n.
fn stirling2(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::from(1);
    for r in 1..=n {
        for j in 1..=r {
            let t = &s[r - 1][j] * BigInt::from(j as u64) + &s[r - 1][j - 1];
            s[r][j] = t;
        }
    }
    s
}

/// E[X^r] = sum_j S(r,j) E[(X)_j] from factorial moments f[0] = E[(X)_1], ...
pub fn stirling_raw_from_factorial(f: &[ExactScalar]) -> Vec<ExactScalar> {
    let r = f.len();
    let s = stirling2(r);
    (1..=r)
        .map(|l| {
            let mut acc = qi(0);
            for j in 1..=l {
                acc += ExactScalar::from(s[l][j].clone()) * &f[j - 1];
            }
            acc
        })
        .collect()
}

/// Central moments from raw moments about the given mean; the first entry is
/// reported as the mean itself.
pub fn central_from_raw(raws: &[ExactScalar], mean: &ExactScalar) -> Vec<ExactScalar> {
    let r = raws.len();
    let mut out = Vec::with_capacity(r);
    for l in 1..=r {
        if l == 1 {
            out.push(mean.clone());
            continue;
        }
        // E[(X - mu)^l] = sum_j C(l,j) E[X^j] (-mu)^(l-j), with E[X^0] = 1
        let mut acc = qi(0);
        for j in 0..=l {
            let raw_j = if j == 0 { qi(1) } else { raws[j - 1].clone() };
            acc += ExactScalar::from(binomial(l as u64, j as u64))
                * raw_j
                * pow(&-mean.clone(), (l - j) as u32);
        }
        out.push(acc);
    }
    out
}

/// Factorial moments E[(X)_1..(X)_r] via the truncated recurrence engine.
pub fn factorial_moments(variant: Variant, n: usize, r: usize) -> Vec<ExactScalar> {
    let tr = truncated_moments(variant, n, r);
    let mut fact = qi(1);
    (1..=r)
        .map(|j| {
            fact *= qi(j as i64);
            tr[j].clone() * &fact
        })
        .collect()
}

/// Means for n = 1..n_max (order-1 truncated recurrence; exact).
pub fn mean_sequence(variant: Variant, n_max: usize) -> Vec<ExactScalar> {
    let table = pgf_table(variant, n_max, Some(1));
    (1..=n_max).map(|n| table[n].coeff(1)).collect()
}

/// Closed-form fit of the r-th central moment (mean when r = 1) against the
/// basis, scanning the number of skipped initial points from `skip` upward
/// until the fit verifies on all remaining data. Returns the coefficients
/// and the discovered validity threshold n0 (fit holds for n >= n0).
pub fn fit_moment(
    variant: Variant,
    r: usize,
    basis: &[BasisFn],
    skip: usize,
) -> Result<(Vec<(String, ExactScalar)>, usize), GuessError> {
    let max_skip = skip + 6;
    let n_max = basis.len() + max_skip + 6;
    let table = pgf_table(variant, n_max, None);
    let data: Vec<(i64, ExactScalar)> = (1..=n_max)
        .map(|n| {
            let p = Pgf {
                n,
                poly: table[n].clone(),
            };
            let ms = moments_from_pgf(&p, r.max(1));
            (n as i64, ms[r - 1].clone())
        })
        .collect();
    let mut last = GuessError::Fail;
    for s in skip..=max_skip {
        match ansatz_fit(&data, basis, s) {
            Ok(fit) => return Ok((fit, s + 1)),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Scaled central moments m_r / m_2^{r/2} for r = 3..=rmax, floating point.
pub fn scaled_moments(variant: Variant, n: usize, rmax: usize) -> Vec<f64> {
    let f = factorial_moments(variant, n, rmax);
    let raws = stirling_raw_from_factorial(&f);
    let centrals = central_from_raw(&raws, &raws[0]);
    let var = scalar_to_f64(&centrals[1]);
    (3..=rmax)
        .map(|r| scalar_to_f64(&centrals[r - 1]) / var.powf(r as f64 / 2.0))
        .collect()
}

/// Mean and variance of a variant at one length, exactly.
pub fn mean_and_variance(variant: Variant, n: usize) -> (ExactScalar, ExactScalar) {
    let f = factorial_moments(variant, n, 2);
    let mean = f[0].clone();
    let var = f[1].clone() + &f[0] - &f[0] * &f[0];
    (mean, var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgf::pgf;
    use emx_core::scalar::{harmonic, q};
    use emx_guess::default_basis;

    #[test]
    fn raw_and_central_basics() {
        // P = (1 + t)/2: mean 1/2, variance 1/4
        let p = pgf(Variant::SwapII, 2);
        let ms = moments_from_pgf(&p, 2);
        assert_eq!(ms[0], q(1, 2));
        assert_eq!(ms[1], q(1, 4));
        // degenerate distribution: all central moments vanish
        let ded = Pgf {
            n: 3,
            poly: emx_core::Poly::monomial(qi(1), 7),
        };
        let ms = moments_from_pgf(&ded, 4);
        assert_eq!(ms[0], qi(7));
        assert!(ms[1..].iter().all(|m| m == &qi(0)));
    }

    #[test]
    fn stirling_pipeline_matches_direct() {
        // f = [mu, E[X(X-1)]] gives E[X^2] = f2 + mu
        let f = vec![q(3, 2), q(5, 2)];
        let raws = stirling_raw_from_factorial(&f);
        assert_eq!(raws[0], q(3, 2));
        assert_eq!(raws[1], q(5, 2) + q(3, 2));

        for n in 2..=8usize {
            let p = pgf(Variant::SwapI, n);
            let direct = moments_from_pgf(&p, 4);
            let f = factorial_moments(Variant::SwapI, n, 4);
            let raws = stirling_raw_from_factorial(&f);
            let via_stirling = central_from_raw(&raws, &raws[0]);
            assert_eq!(direct, via_stirling, "n={n}");
        }
    }

    #[test]
    fn nulla_variance_closed_form() {
        // variance: n(7n+13) - 2(n+1)H1(n) - 4(n+1)^2 H2(n)
        for n in [5usize, 12, 30] {
            let tr = truncated_moments(Variant::NullaComparisons, n, 2);
            let mean = tr[1].clone();
            let var = tr[2].clone() * qi(2) + &mean - &mean * &mean;
            let nn = qi(n as i64);
            let expect = nn.clone() * (qi(7) * &nn + qi(13))
                - qi(2) * (nn.clone() + qi(1)) * harmonic(1, n as u64)
                - qi(4) * pow(&(nn.clone() + qi(1)), 2) * harmonic(2, n as u64);
            assert_eq!(var, expect, "n={n}");
        }
    }

    #[test]
    fn variance_comparisons_between_variants() {
        for n in 3..=16usize {
            let (m1, v1) = mean_and_variance(Variant::SwapI, n);
            let (m2, v2) = mean_and_variance(Variant::SwapII, n);
            assert_eq!(m1, m2, "n={n}");
            assert!(v2 < v1, "variance II should be smaller at n={n}");
        }
    }

    #[test]
    fn fit_recovers_swap_variance_theorems() {
        // Variant I variance: 2n(n+2) - (n+1)H1(n) - (n+1)^2 H2(n)
        let basis = default_basis(2);
        let (fit, n0) = fit_moment(Variant::SwapI, 2, &basis, 0).unwrap();
        assert_eq!(n0, 1);
        let get = |name: &str| {
            fit.iter()
                .find(|(n, _)| n == name)
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(get("n^2"), qi(2));
        assert_eq!(get("n"), qi(4));
        assert_eq!(get("H1"), qi(-1));
        assert_eq!(get("n*H1"), qi(-1));
        assert_eq!(get("H2"), qi(-1));
        assert_eq!(get("n*H2"), qi(-2));
        assert_eq!(get("n^2*H2"), qi(-1));

        // Variant II variance: n(11n+17)/6 - (n+1)H1(n)/3 - (n+1)^2 H2(n)
        let (fit2, _) = fit_moment(Variant::SwapII, 2, &basis, 0).unwrap();
        let get2 = |name: &str| {
            fit2.iter()
                .find(|(n, _)| n == name)
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(get2("n^2"), q(11, 6));
        assert_eq!(get2("n"), q(17, 6));
        assert_eq!(get2("n*H1"), q(-1, 3));
        assert_eq!(get2("n^2*H2"), qi(-1));

        // Variant III mean: (n+1)H1(n) - 4n/3 - 1/3, valid from n >= 2
        let basis1 = default_basis(1);
        let (fit3, n03) = fit_moment(Variant::SwapIII, 1, &basis1, 0).unwrap();
        assert!(n03 <= 2, "n0 = {n03}");
        let get3 = |name: &str| {
            fit3.iter()
                .find(|(n, _)| n == name)
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(get3("n"), q(-4, 3));
        assert_eq!(get3("1"), q(-1, 3));
        assert_eq!(get3("H1"), qi(1));
        assert_eq!(get3("n*H1"), qi(1));
    }

    #[test]
    fn mean_sequences_match_published_lists() {
        let three = mean_sequence(Variant::ThreePivotComparisons, 10);
        let want = [
            qi(0),
            qi(1),
            q(8, 3),
            q(14, 3),
            q(106, 15),
            q(49, 5),
            q(64, 5),
            q(561, 35),
            q(1226, 63),
            q(5192, 225),
        ];
        assert_eq!(three, want.to_vec());

        let v4 = mean_sequence(Variant::SwapIV, 5);
        assert_eq!(v4, vec![qi(0), q(1, 2), q(7, 6), qi(2), q(179, 60)]);

        let v5 = mean_sequence(Variant::SwapV, 5);
        assert_eq!(v5, vec![qi(0), q(1, 2), q(4, 3), q(20, 9), q(155, 48)]);
    }

    #[test]
    fn variant_v_beats_iv_for_large_n() {
        let v4 = mean_sequence(Variant::SwapIV, 20);
        let v5 = mean_sequence(Variant::SwapV, 20);
        for n in 14..=20usize {
            assert!(v5[n - 1] < v4[n - 1], "n={n}");
        }
    }

    #[test]
    fn scaled_second_moment_is_one() {
        let f = factorial_moments(Variant::SwapIV, 20, 4);
        let raws = stirling_raw_from_factorial(&f);
        let centrals = central_from_raw(&raws, &raws[0]);
        let scaled2 = centrals[1].clone() / centrals[1].clone();
        assert_eq!(scaled2, qi(1));
    }
}
