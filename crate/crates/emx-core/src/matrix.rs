//! Exact matrices with determinant (fraction-free Bareiss over integral
//! domains, Gaussian elimination over fields), Ryser permanent, linear solve,
//! and nullspace.

use crate::error::CoreError;
use crate::ring::{Field, IntegralDomain, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R: Ring> {
    rows: usize,
    cols: usize,
    e: Vec<R>,
}

/// Dimension cap for the permanent (Ryser is exponential).
pub const PERMANENT_CAP: usize = 20;

#[derive(Clone, PartialEq, Debug)]
pub enum SolveOutcome<K> {
    Unique(Vec<K>),
    NoSolution,
    /// A particular solution with all free variables set to zero.
    Underdetermined(Vec<K>),
}

impl<R: Ring> Mat<R> {
    pub fn new(rows: usize, cols: usize, e: Vec<R>) -> Self {
        assert_eq!(e.len(), rows * cols, "entry count mismatch");
        Mat { rows, cols, e }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut e = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                e.push(f(i, j));
            }
        }
        Mat { rows, cols, e }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.e[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.e[i * self.cols + j] = v;
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn matvec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    /// Copy with the given rows and columns removed.
    pub fn minor(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Self {
        let rs: Vec<usize> = (0..self.rows).filter(|i| !drop_rows.contains(i)).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|j| !drop_cols.contains(j)).collect();
        Mat::from_fn(rs.len(), cs.len(), |i, j| self.get(rs[i], cs[j]).clone())
    }

    /// Exact permanent by Ryser's inclusion-exclusion with Gray-code subset
    /// updates. Exponential: capped at `PERMANENT_CAP`.
    pub fn permanent(&self) -> Result<R, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > PERMANENT_CAP {
            return Err(CoreError::PermanentTooLarge(n, PERMANENT_CAP));
        }
        if n == 0 {
            return Ok(R::one());
        }
        // Ryser: per = (-1)^n * sum_{S subseteq cols} (-1)^{|S|} prod_i sum_{j in S} a_ij
        let mut row_sums = vec![R::zero(); n];
        let mut total = R::zero();
        let mut prev_gray: u64 = 0;
        for g in 1..(1u64 << n) {
            let gray = g ^ (g >> 1);
            let bit = gray ^ prev_gray;
            let j = bit.trailing_zeros() as usize;
            let adding = gray & bit != 0;
            for (i, rs) in row_sums.iter_mut().enumerate() {
                let a = self.get(i, j);
                *rs = if adding { rs.add(a) } else { rs.sub(a) };
            }
            prev_gray = gray;
            let mut prod = R::one();
            for rs in &row_sums {
                prod = prod.mul(rs);
            }
            let popcount = gray.count_ones() as usize;
            if (n - popcount) % 2 == 0 {
                total = total.add(&prod);
            } else {
                total = total.sub(&prod);
            }
        }
        Ok(total)
    }
}

impl<R: IntegralDomain> Mat<R> {
    /// Fraction-free Bareiss determinant. Exact over any integral domain.
    pub fn determinant(&self) -> Result<R, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.e.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                // pivot on the first row below with a nonzero entry
                match (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(idx(k, j), idx(r, j));
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(R::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[idx(k, k)]
                        .mul(&a[idx(i, j)])
                        .sub(&a[idx(i, k)].mul(&a[idx(k, j)]));
                    a[idx(i, j)] = t.exact_div(&prev);
                }
                a[idx(i, k)] = R::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let det = a[idx(n - 1, n - 1)].clone();
        Ok(if sign_flip { det.neg() } else { det })
    }
}

impl<K: Field> Mat<K> {
    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    let a = self.get(p, j).clone();
                    let b = self.get(row, j).clone();
                    self.set(p, j, b);
                    self.set(row, j, a);
                }
            }
            let inv = self.get(row, col).inv();
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).sub(&f.mul(self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Solve A x = b exactly, classifying the outcome.
    pub fn solve_linear(&self, b: &[K]) -> Result<SolveOutcome<K>, CoreError> {
        if b.len() != self.rows {
            return Err(CoreError::DimensionMismatch(format!(
                "matrix has {} rows but rhs has {} entries",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(SolveOutcome::NoSolution);
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        if pivots.len() == self.cols {
            Ok(SolveOutcome::Unique(x))
        } else {
            Ok(SolveOutcome::Underdetermined(x))
        }
    }

    /// Basis of the right kernel in reduced-echelon normalization, ordered by
    /// free column index.
    pub fn nullspace_basis(&self) -> Vec<Vec<K>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![K::zero(); self.cols];
                v[fc] = K::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = a.get(r, fc).neg();
                }
                v
            })
            .collect()
    }

    /// Gaussian-elimination determinant over a field.
    pub fn determinant_field(&self) -> Result<K, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = K::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(K::zero());
            };
            if p != col {
                for j in 0..n {
                    let x = a.get(p, j).clone();
                    let y = a.get(col, j).clone();
                    a.set(p, j, y);
                    a.set(col, j, x);
                }
                det = det.neg();
            }
            let piv = a.get(col, col).clone();
            det = det.mul(&piv);
            let inv = piv.inv();
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).mul(&inv);
                for j in col..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qi, ExactScalar};
    use num_bigint::BigInt;

    fn mi(rows: usize, cols: usize, v: &[i64]) -> Mat<BigInt> {
        Mat::new(rows, cols, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn mq(rows: usize, cols: usize, v: &[i64]) -> Mat<ExactScalar> {
        Mat::new(rows, cols, v.iter().map(|&x| qi(x)).collect())
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(mi(2, 2, &[3, 1, 2, 1]).determinant().unwrap(), BigInt::from(1));
        assert_eq!(
            Mat::<BigInt>::identity(5).determinant().unwrap(),
            BigInt::from(1)
        );
        assert!(mi(1, 2, &[1, 2]).determinant().is_err());
        // needs a row swap
        assert_eq!(
            mi(2, 2, &[0, 1, 1, 0]).determinant().unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(mi(2, 2, &[1, 2, 3, 4]).permanent().unwrap(), BigInt::from(10));
        assert_eq!(Mat::<BigInt>::identity(6).permanent().unwrap(), BigInt::from(1));
        // all-ones n x n permanent = n!
        let ones = Mat::from_fn(5, 5, |_, _| BigInt::from(1));
        assert_eq!(ones.permanent().unwrap(), BigInt::from(120));
    }

    #[test]
    fn solve_examples() {
        let a = mq(2, 2, &[1, 0, 0, 1]);
        assert_eq!(
            a.solve_linear(&[qi(3), qi(7)]).unwrap(),
            SolveOutcome::Unique(vec![qi(3), qi(7)])
        );
        let s = mq(2, 2, &[1, 1, 1, 1]);
        assert_eq!(
            s.solve_linear(&[qi(1), qi(2)]).unwrap(),
            SolveOutcome::NoSolution
        );
        assert_eq!(
            s.solve_linear(&[qi(2), qi(2)]).unwrap(),
            SolveOutcome::Underdetermined(vec![qi(2), qi(0)])
        );
        assert!(s.solve_linear(&[qi(1)]).is_err());
    }

    #[test]
    fn nullspace_examples() {
        let z = Mat::<ExactScalar>::zeros(2, 2);
        assert_eq!(
            z.nullspace_basis(),
            vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]]
        );
        let a = mq(1, 2, &[1, 1]);
        assert_eq!(a.nullspace_basis(), vec![vec![qi(-1), qi(1)]]);
        let full = mq(2, 2, &[1, 2, 3, 4]);
        assert!(full.nullspace_basis().is_empty());
    }

    #[test]
    fn field_det_matches_bareiss() {
        let m = mq(3, 3, &[2, -1, 0, -1, 2, -1, 0, -1, 2]);
        assert_eq!(m.determinant_field().unwrap(), qi(4));
        assert_eq!(m.determinant().unwrap(), qi(4));
    }
}
