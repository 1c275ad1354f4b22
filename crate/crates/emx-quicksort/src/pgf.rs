//! Exact probability generating functions for the comparison/swap counts of
//! Quicksort variants, driven by per-variant recurrences over the pivot rank.
//!
//! The same recurrences also run in truncated mode (variable w, t = 1 + w)
//! where every product keeps only the first r + 1 coefficients; r! times the
//! coefficient of w^r is then the r-th factorial moment.

use emx_core::scalar::{binomial, q, qi, ExactScalar};
use emx_core::Poly;

/// A Quicksort variant whose cost distribution we analyze exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    /// Comparisons of classical 1-pivot Quicksort (partition into new lists).
    NullaComparisons,
    /// Swaps when the first element is the pivot and smaller elements are
    /// inserted before it.
    SwapI,
    /// Same as I but the pivot index is uniformly random.
    SwapII,
    /// Swaps of the Lomuto in-place partition (always swaps, k per step).
    SwapIII,
    /// Lomuto partition that skips same-index swaps.
    SwapIV,
    /// Variant IV with the pivot chosen as the more median of two candidates.
    SwapV,
    /// Comparisons of dual-pivot Quicksort.
    DualComparisons,
    /// Swaps of the toy dual-pivot model.
    DualSwaps,
    /// Comparisons of 3-pivot Quicksort with binary-search partition.
    ThreePivotComparisons,
    /// Comparisons of k-pivot Quicksort with linear-scan partition.
    KPivotLinear(usize),
}

impl Variant {
    pub fn name(&self) -> String {
        match self {
            Variant::NullaComparisons => "nulla-comparisons".into(),
            Variant::SwapI => "swap-i".into(),
            Variant::SwapII => "swap-ii".into(),
            Variant::SwapIII => "swap-iii".into(),
            Variant::SwapIV => "swap-iv".into(),
            Variant::SwapV => "swap-v".into(),
            Variant::DualComparisons => "dual-comparisons".into(),
            Variant::DualSwaps => "dual-swaps".into(),
            Variant::ThreePivotComparisons => "three-pivot-comparisons".into(),
            Variant::KPivotLinear(k) => format!("k-pivot-linear-{k}"),
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        Some(match s {
            "nulla-comparisons" => Variant::NullaComparisons,
            "swap-i" => Variant::SwapI,
            "swap-ii" => Variant::SwapII,
            "swap-iii" => Variant::SwapIII,
            "swap-iv" => Variant::SwapIV,
            "swap-v" => Variant::SwapV,
            "dual-comparisons" => Variant::DualComparisons,
            "dual-swaps" => Variant::DualSwaps,
            "three-pivot-comparisons" => Variant::ThreePivotComparisons,
            other => {
                let k = other.strip_prefix("k-pivot-linear-")?.parse().ok()?;
                Variant::KPivotLinear(k)
            }
        })
    }
}

/// Probability generating function of the cost for lists of length n.
#[derive(Clone, PartialEq, Debug)]
pub struct Pgf {
    pub n: usize,
    pub poly: Poly<ExactScalar>,
}

/// t^e, or its truncated image (1+w)^e when running in truncated mode.
fn tpow(e: usize, trunc: Option<usize>) -> Poly<ExactScalar> {
    match trunc {
        None => Poly::monomial(qi(1), e),
        Some(r) => {
            let top = r.min(e);
            Poly::new(
                (0..=top)
                    .map(|j| ExactScalar::from(binomial(e as u64, j as u64)))
                    .collect(),
            )
        }
    }
}

fn pmul(a: &Poly<ExactScalar>, b: &Poly<ExactScalar>, trunc: Option<usize>) -> Poly<ExactScalar> {
    let p = a.mul(b);
    match trunc {
        None => p,
        Some(r) => p.truncated(r + 1),
    }
}

/// Q(n,k,i,t): distribution of first-partition swaps for Variant II when the
/// pivot sits at index i and is the k-th smallest.
pub fn per_prob(n: usize, k: usize, i: usize) -> Poly<ExactScalar> {
    per_prob_mode(n, k, i, None)
}

fn per_prob_mode(n: usize, k: usize, i: usize, trunc: Option<usize>) -> Poly<ExactScalar> {
    assert!(1 <= k && k <= n && 1 <= i && i <= n);
    let (n_, k_, i_) = (n as i64, k as i64, i as i64);
    let j_lo = 0.max(k_ - 1 - n_ + i_);
    let j_hi = (i_ - 1).min(k_ - 1);
    let mut acc = Poly::zero();
    for j in j_lo..=j_hi {
        let mut p = ExactScalar::from(binomial((i_ - 1) as u64, j as u64));
        for s in 0..j {
            p *= q(k_ - 1 - s, n_ - 1 - s);
        }
        for s in 0..=(i_ - j - 2) {
            p *= q(n_ - k_ - s, n_ - 1 - j - s);
        }
        let e = (i_ + k_ - 2 - 2 * j) as usize;
        acc = acc.add(&tpow(e, trunc).scale(&p));
    }
    acc
}

/// Q(n,k,t): distribution of first-partition swaps for Variant IV when the
/// pivot (last element) is the k-th smallest; identically 1 when k = n.
pub fn ip_prob(n: usize, k: usize) -> Poly<ExactScalar> {
    ip_prob_mode(n, k, None)
}

fn ip_prob_mode(n: usize, k: usize, trunc: Option<usize>) -> Poly<ExactScalar> {
    assert!(1 <= k && k <= n && n >= 2);
    if k == n {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for s in 1..=k {
        let p = q((n - k) as i64, (n - 1) as i64)
            * ExactScalar::from(binomial((k - 1) as u64, (k - s) as u64))
            / ExactScalar::from(binomial((n - 2) as u64, (k - s) as u64));
        acc = acc.add(&tpow(s, trunc).scale(&p));
    }
    acc
}

/// Pivot-rank distribution for Variant V (the more median of two candidates).
pub fn pivot_dist_v5(n: usize) -> Vec<ExactScalar> {
    assert!(n >= 1);
    if n == 1 {
        return vec![qi(1)];
    }
    let mut pr = vec![qi(0); n];
    if n % 2 == 0 {
        let m = (n / 2) as i64;
        for k in 1..=n / 2 {
            let p = q(4 * k as i64 - 3, (2 * m - 1) * 2 * m);
            pr[k - 1] = p.clone();
            pr[n - k] = p;
        }
    } else {
        let m = ((n + 1) / 2) as i64;
        for k in 1..n.div_ceil(2) {
            let p = q(4 * k as i64 - 3, (2 * m - 1) * (2 * m - 2));
            pr[k - 1] = p.clone();
            pr[n - k] = p;
        }
        pr[(n - 1) / 2] = q(2, 2 * m - 1);
    }
    pr
}

/// P_0..P_nmax for a variant; `trunc = Some(r)` computes the series of
/// P_n(1+w) truncated at w^r instead of the full polynomial in t.
pub fn pgf_table(variant: Variant, n_max: usize, trunc: Option<usize>) -> Vec<Poly<ExactScalar>> {
    let mut p: Vec<Poly<ExactScalar>> = Vec::with_capacity(n_max + 1);
    // reused cross-variant table for pivot-sorting costs
    let nulla = |k: usize, trunc| pgf_table(Variant::NullaComparisons, k, trunc);
    // SwapV combines Variant IV sub-PGFs; build that table once
    let iv = match variant {
        Variant::SwapV => pgf_table(Variant::SwapIV, n_max.saturating_sub(1), trunc),
        _ => Vec::new(),
    };
    for n in 0..=n_max {
        if n <= 1 {
            p.push(Poly::one());
            continue;
        }
        let next = match variant {
            Variant::NullaComparisons => {
                let mut acc = Poly::zero();
                for k in 1..=n {
                    acc = acc.add(&pmul(&p[k - 1], &p[n - k], trunc));
                }
                pmul(&acc, &tpow(n - 1, trunc), trunc).scale(&q(1, n as i64))
            }
            Variant::SwapI => {
                let mut acc = Poly::zero();
                for k in 1..=n {
                    let t = pmul(&p[k - 1], &p[n - k], trunc);
                    acc = acc.add(&pmul(&t, &tpow(k - 1, trunc), trunc));
                }
                acc.scale(&q(1, n as i64))
            }
            Variant::SwapII => {
                let mut acc = Poly::zero();
                for k in 1..=n {
                    let pk = pmul(&p[k - 1], &p[n - k], trunc);
                    let mut qsum = Poly::zero();
                    for i in 1..=n {
                        qsum = qsum.add(&per_prob_mode(n, k, i, trunc));
                    }
                    acc = acc.add(&pmul(&pk, &qsum, trunc));
                }
                acc.scale(&q(1, (n * n) as i64))
            }
            Variant::SwapIII => {
                let mut acc = Poly::zero();
                for k in 1..=n {
                    let t = pmul(&p[k - 1], &p[n - k], trunc);
                    acc = acc.add(&pmul(&t, &tpow(k, trunc), trunc));
                }
                acc.scale(&q(1, n as i64))
            }
            Variant::SwapIV => {
                let mut acc = Poly::zero();
                for k in 1..=n {
                    let t = pmul(&p[k - 1], &p[n - k], trunc);
                    acc = acc.add(&pmul(&t, &ip_prob_mode(n, k, trunc), trunc));
                }
                acc.scale(&q(1, n as i64))
            }
            Variant::SwapV => {
                // Two-candidate pivot selection applies at the top level only:
                // the sublists are sorted with the Variant IV procedure, so the
                // recursion combines Variant IV sub-PGFs (this is the model
                // behind the reference mean sequence; recursing into SwapV
                // itself gives a different, larger sequence).
                let pr = pivot_dist_v5(n);
                let mut acc = Poly::zero();
                for k in 1..=n {
                    let t = pmul(&iv[k - 1], &iv[n - k], trunc);
                    let t = pmul(&t, &ip_prob_mode(n, k, trunc), trunc);
                    acc = acc.add(&t.scale(&pr[k - 1]));
                }
                acc
            }
            Variant::DualComparisons => {
                if n == 2 {
                    tpow(1, trunc)
                } else {
                    let mut acc = Poly::zero();
                    for j in 2..=n {
                        for i in 1..j {
                            let t = pmul(&p[i - 1], &p[j - i - 1], trunc);
                            let t = pmul(&t, &p[n - j], trunc);
                            acc = acc.add(&pmul(&t, &tpow(2 * n - i - 2, trunc), trunc));
                        }
                    }
                    acc.scale(&(qi(1) / ExactScalar::from(binomial(n as u64, 2))))
                }
            }
            Variant::DualSwaps => {
                if n == 2 {
                    tpow(1, trunc).scale(&q(1, 2)).add(&Poly::constant(q(1, 2)))
                } else {
                    let half = tpow(1, trunc).scale(&q(1, 2)).add(&Poly::constant(q(1, 2)));
                    let mut acc = Poly::zero();
                    for j in 2..=n {
                        for i in 1..j {
                            let t = pmul(&p[i - 1], &p[j - i - 1], trunc);
                            let t = pmul(&t, &p[n - j], trunc);
                            acc = acc.add(&pmul(&t, &tpow(n - 1 + i - j, trunc), trunc));
                        }
                    }
                    pmul(&acc, &half, trunc)
                        .scale(&(qi(1) / ExactScalar::from(binomial(n as u64, 2))))
                }
            }
            Variant::ThreePivotComparisons => {
                if n == 2 {
                    tpow(1, trunc)
                } else if n == 3 {
                    tpow(3, trunc)
                        .scale(&q(2, 3))
                        .add(&tpow(2, trunc).scale(&q(1, 3)))
                } else {
                    let head = tpow(2 * n - 3, trunc)
                        .scale(&q(2, 3))
                        .add(&tpow(2 * n - 4, trunc).scale(&q(1, 3)));
                    let mut acc = Poly::zero();
                    for k in 3..=n {
                        for j in 2..k {
                            for i in 1..j {
                                let t = pmul(&p[i - 1], &p[j - i - 1], trunc);
                                let t = pmul(&t, &p[k - j - 1], trunc);
                                let t = pmul(&t, &p[n - k], trunc);
                                acc = acc.add(&t);
                            }
                        }
                    }
                    pmul(&acc, &head, trunc)
                        .scale(&(qi(1) / ExactScalar::from(binomial(n as u64, 3))))
                }
            }
            Variant::KPivotLinear(k) => {
                assert!(k >= 1);
                if n < k {
                    nulla(n, trunc)[n].clone()
                } else {
                    // pivot-sorting cost: 1-pivot comparisons on k elements
                    let sort_cost = nulla(k, trunc)[k].clone();
                    // sum over sublist sizes s_1..s_{k+1}: element in sublist
                    // i <= k costs i comparisons, in sublist k+1 costs k
                    let mut acc = Poly::zero();
                    let mut sizes = vec![0usize; k + 1];
                    compositions(n - k, 0, &mut sizes, &mut |sizes| {
                        let mut t = Poly::one();
                        let mut cost = 0usize;
                        for (idx, &s) in sizes.iter().enumerate() {
                            let per = if idx < k { idx + 1 } else { k };
                            cost += per * s;
                            t = pmul(&t, &p[s], trunc);
                        }
                        acc = acc.add(&pmul(&t, &tpow(cost, trunc), trunc));
                    });
                    pmul(&acc, &sort_cost, trunc)
                        .scale(&(qi(1) / ExactScalar::from(binomial(n as u64, k as u64))))
                }
            }
        };
        p.push(next);
    }
    p
}

/// All ways to write `total` as an ordered sum over slots[at..].
fn compositions(total: usize, at: usize, slots: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at + 1 == slots.len() {
        slots[at] = total;
        f(slots);
        return;
    }
    for v in 0..=total {
        slots[at] = v;
        compositions(total - v, at + 1, slots, f);
    }
}

/// The exact PGF of a variant at length n.
pub fn pgf(variant: Variant, n: usize) -> Pgf {
    let table = pgf_table(variant, n, None);
    Pgf {
        n,
        poly: table[n].clone(),
    }
}

/// Coefficients of w^0..w^r of P_n(1+w); r! times the w^r coefficient is the
/// r-th factorial moment.
pub fn truncated_moments(variant: Variant, n: usize, r: usize) -> Vec<ExactScalar> {
    let table = pgf_table(variant, n, Some(r));
    let mut out: Vec<ExactScalar> = table[n].coeffs().to_vec();
    out.resize(r + 1, qi(0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use emx_core::scalar::harmonic;

    fn mean(p: &Poly<ExactScalar>) -> ExactScalar {
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(s, c)| qi(s as i64) * c)
            .fold(qi(0), |a, b| a + b)
    }

    #[test]
    fn pgf_basics() {
        assert_eq!(pgf(Variant::SwapI, 2).poly, Poly::new(vec![q(1, 2), q(1, 2)]));
        // dual comparisons at n = 5
        let p5 = pgf(Variant::DualComparisons, 5).poly;
        let mut want = vec![qi(0); 11];
        want[10] = q(2, 15);
        want[9] = q(1, 15);
        want[8] = q(1, 5);
        want[7] = q(4, 15);
        want[6] = q(1, 3);
        assert_eq!(p5, Poly::new(want));
    }

    #[test]
    fn normalization_and_nonnegativity() {
        let variants = [
            Variant::NullaComparisons,
            Variant::SwapI,
            Variant::SwapII,
            Variant::SwapIII,
            Variant::SwapIV,
            Variant::SwapV,
            Variant::DualComparisons,
            Variant::DualSwaps,
            Variant::ThreePivotComparisons,
            Variant::KPivotLinear(2),
        ];
        for v in variants {
            let table = pgf_table(v, 12, None);
            for (n, p) in table.iter().enumerate() {
                assert_eq!(p.eval(&qi(1)), qi(1), "{v:?} n={n}");
                assert!(
                    p.coeffs().iter().all(|c| c >= &qi(0)),
                    "{v:?} n={n} has a negative coefficient"
                );
            }
        }
    }

    #[test]
    fn nulla_equals_dual_comparisons() {
        let a = pgf_table(Variant::NullaComparisons, 10, None);
        let b = pgf_table(Variant::DualComparisons, 10, None);
        assert_eq!(a, b);
    }

    #[test]
    fn kpivot_one_is_nulla() {
        let a = pgf_table(Variant::NullaComparisons, 9, None);
        let b = pgf_table(Variant::KPivotLinear(1), 9, None);
        assert_eq!(a, b);
    }

    #[test]
    fn per_prob_examples() {
        let p = per_prob(9, 5, 5);
        let mut want = vec![qi(0); 9];
        want[8] = q(1, 70);
        want[6] = q(8, 35);
        want[4] = q(18, 35);
        want[2] = q(8, 35);
        want[0] = q(1, 70);
        assert_eq!(p, Poly::new(want));
        for k in 1..=6 {
            assert_eq!(per_prob(6, k, 1), Poly::monomial(qi(1), k - 1));
            for i in 1..=6 {
                assert_eq!(per_prob(6, k, i).eval(&qi(1)), qi(1), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn ip_prob_examples() {
        assert_eq!(ip_prob(2, 1), Poly::monomial(qi(1), 1));
        for n in 2..=12 {
            assert_eq!(ip_prob(n, n), Poly::one());
            for k in 1..=n {
                assert_eq!(ip_prob(n, k).eval(&qi(1)), qi(1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pivot_dist_examples() {
        assert_eq!(pivot_dist_v5(2), vec![q(1, 2), q(1, 2)]);
        assert_eq!(pivot_dist_v5(3), vec![q(1, 6), q(2, 3), q(1, 6)]);
        for n in 1..=50 {
            let d = pivot_dist_v5(n);
            let total = d.iter().fold(qi(0), |a, b| a + b);
            assert_eq!(total, qi(1), "n={n}");
            for k in 0..n {
                assert_eq!(d[k], d[n - 1 - k]);
            }
        }
    }

    #[test]
    fn truncation_matches_full_pgf() {
        for v in [Variant::SwapIV, Variant::SwapV, Variant::ThreePivotComparisons] {
            for n in 2..=10usize {
                let full = pgf(v, n).poly;
                let tr = truncated_moments(v, n, 4);
                assert_eq!(tr[0], qi(1));
                // compare factorial moments: sum_s ff(s, j) P(X = s)
                for j in 1..=4usize {
                    let mut fm = qi(0);
                    for (s, c) in full.coeffs().iter().enumerate() {
                        let mut ff = qi(1);
                        for i in 0..j {
                            ff *= qi(s as i64 - i as i64);
                        }
                        fm += ff * c;
                    }
                    let mut fact = qi(1);
                    for i in 1..=j {
                        fact *= qi(i as i64);
                    }
                    assert_eq!(tr[j].clone() * fact, fm, "{v:?} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn means_match_known_closed_forms() {
        for n in 1..=16u64 {
            let h1 = harmonic(1, n);
            let nn = qi(n as i64);
            assert_eq!(
                mean(&pgf(Variant::SwapI, n as usize).poly),
                (nn.clone() + qi(1)) * &h1 - qi(2) * &nn,
                "swap-i n={n}"
            );
            assert_eq!(
                mean(&pgf(Variant::SwapII, n as usize).poly),
                (nn.clone() + qi(1)) * &h1 - qi(2) * &nn,
                "swap-ii n={n}"
            );
            // the rational-term closed forms only hold from small thresholds
            if n >= 2 {
                assert_eq!(
                    mean(&pgf(Variant::SwapIII, n as usize).poly),
                    (nn.clone() + qi(1)) * &h1 - q(4, 3) * &nn - q(1, 3),
                    "swap-iii n={n}"
                );
            }
            assert_eq!(
                mean(&pgf(Variant::SwapIV, n as usize).poly),
                (nn.clone() + qi(2)) * &h1 - q(5, 2) * &nn - q(1, 2),
                "swap-iv n={n}"
            );
            if n >= 4 {
                assert_eq!(
                    mean(&pgf(Variant::DualSwaps, n as usize).poly),
                    q(4, 5) * (nn.clone() + qi(1)) * &h1 - q(39, 25) * &nn - q(1, 100),
                    "dual-swaps n={n}"
                );
            }
        }
    }
}
