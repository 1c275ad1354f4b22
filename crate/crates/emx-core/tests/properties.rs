//! Property tests: ring axioms, gcd-reduction stability, and the linear
//! algebra oracles (cofactor expansion, brute-force permanent,
//! multiplicativity of the determinant, solve round trips).

use emx_core::matrix::SolveOutcome;
use emx_core::scalar::{qi, ExactScalar};
use emx_core::{Mat, Poly, RatQ};
use proptest::prelude::*;

fn small_scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| emx_core::scalar::q(n, d))
}

fn small_poly() -> impl Strategy<Value = Poly<ExactScalar>> {
    prop::collection::vec(small_scalar(), 0..5).prop_map(Poly::new)
}

fn int_matrix(n: usize) -> impl Strategy<Value = Mat<ExactScalar>> {
    prop::collection::vec(-5i64..=5, n * n)
        .prop_map(move |v| Mat::new(n, n, v.into_iter().map(qi).collect()))
}

/// Cofactor expansion along the first row (oracle for the determinant).
fn det_cofactor(m: &Mat<ExactScalar>) -> ExactScalar {
    let n = m.rows();
    if n == 0 {
        return qi(1);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = qi(0);
    for j in 0..n {
        let c = m.get(0, j);
        if c == &qi(0) {
            continue;
        }
        let sub = m.minor(&[0], &[j]);
        let term = c * det_cofactor(&sub);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Permutation-sum permanent (oracle).
fn perm_brute(m: &Mat<ExactScalar>) -> ExactScalar {
    fn rec(m: &Mat<ExactScalar>, row: usize, used: &mut Vec<bool>) -> ExactScalar {
        if row == m.rows() {
            return qi(1);
        }
        let mut acc = qi(0);
        for j in 0..m.cols() {
            if !used[j] {
                used[j] = true;
                acc += m.get(row, j) * rec(m, row + 1, used);
                used[j] = false;
            }
        }
        acc
    }
    rec(m, 0, &mut vec![false; m.cols()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn ratfun_reduce_stable(p in small_poly(), q in small_poly(), g in small_poly()) {
        prop_assume!(!q.is_zero() && !g.is_zero());
        let plain = RatQ::new(p.clone(), q.clone());
        let scaled = RatQ::new(p.mul(&g), q.mul(&g));
        prop_assert_eq!(plain, scaled);
    }

    #[test]
    fn det_matches_cofactor(m in (2usize..=5).prop_flat_map(int_matrix)) {
        prop_assert_eq!(m.determinant().unwrap(), det_cofactor(&m));
        prop_assert_eq!(m.determinant_field().unwrap(), det_cofactor(&m));
    }

    #[test]
    fn det_is_multiplicative(a in int_matrix(4), b in int_matrix(4)) {
        let ab = a.matmul(&b);
        prop_assert_eq!(
            ab.determinant().unwrap(),
            a.determinant().unwrap() * b.determinant().unwrap()
        );
    }

    #[test]
    fn permanent_matches_brute_force(m in (2usize..=6).prop_flat_map(int_matrix)) {
        prop_assert_eq!(m.permanent().unwrap(), perm_brute(&m));
    }

    #[test]
    fn solve_round_trip(a in int_matrix(4), x in prop::collection::vec(-9i64..=9, 4)) {
        let x: Vec<ExactScalar> = x.into_iter().map(qi).collect();
        prop_assume!(a.determinant().unwrap() != qi(0));
        let b = a.matvec(&x);
        prop_assert_eq!(a.solve_linear(&b).unwrap(), SolveOutcome::Unique(x));
    }

    #[test]
    fn nullspace_vectors_are_in_kernel(m in (2usize..=4).prop_flat_map(int_matrix)) {
        for v in m.nullspace_basis() {
            for entry in m.matvec(&v) {
                prop_assert_eq!(entry, qi(0));
            }
        }
    }
}
