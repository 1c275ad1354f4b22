//! Almost-diagonal (banded Toeplitz) matrix families: construction,
//! determinant/permanent sequences, generating functions by guessing, and by
//! the symbolic dynamic program over cofactor-expansion minor states.

use std::collections::BTreeMap;

use emx_core::matrix::SolveOutcome;
use emx_core::scalar::{qi, ExactScalar};
use emx_core::{Mat, Poly, RatQ, Ring};
use emx_guess::{guess_rec, GuessError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DiagError {
    #[error("first row and first column must share the corner entry")]
    CornerMismatch,
    #[error("dimension {0} is smaller than the band prefixes")]
    TooSmall(usize),
    #[error("guessing failed: {0}")]
    Guess(GuessError),
    #[error("the state system is singular")]
    SingularSystem,
    #[error("generating function failed validation against direct {0} values")]
    ValidationFailed(&'static str),
}

/// Descriptor [n, firstRow, firstCol] of an almost-diagonal matrix: entry
/// a_{ij} depends only on j - i, zero outside the band.
#[derive(Clone, PartialEq, Debug)]
pub struct DiagSpec {
    pub n: usize,
    pub first_row: Vec<ExactScalar>,
    pub first_col: Vec<ExactScalar>,
}

impl DiagSpec {
    pub fn new(
        n: usize,
        first_row: Vec<ExactScalar>,
        first_col: Vec<ExactScalar>,
    ) -> Result<Self, DiagError> {
        assert!(!first_row.is_empty() && !first_col.is_empty());
        if first_row[0] != first_col[0] {
            return Err(DiagError::CornerMismatch);
        }
        if n < first_row.len().max(first_col.len()) {
            return Err(DiagError::TooSmall(n));
        }
        Ok(DiagSpec {
            n,
            first_row,
            first_col,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GfMode {
    Det,
    Perm,
}

/// Build the concrete n x n matrix of a spec.
pub fn build_matrix(spec: &DiagSpec) -> Mat<ExactScalar> {
    Mat::from_fn(spec.n, spec.n, |i, j| {
        if j >= i {
            spec.first_row.get(j - i).cloned().unwrap_or_else(|| qi(0))
        } else {
            spec.first_col.get(i - j).cloned().unwrap_or_else(|| qi(0))
        }
    })
}

fn value_at(row: &[ExactScalar], col: &[ExactScalar], dim: usize, mode: GfMode) -> ExactScalar {
    let m = Mat::from_fn(dim, dim, |i, j| {
        if j >= i {
            row.get(j - i).cloned().unwrap_or_else(|| qi(0))
        } else {
            col.get(i - j).cloned().unwrap_or_else(|| qi(0))
        }
    });
    match mode {
        GfMode::Det => m.determinant().unwrap(),
        GfMode::Perm => m.permanent().unwrap(),
    }
}

/// Determinant (or permanent) values of the family for dimensions m..=n.
pub fn value_sequence(
    row: &[ExactScalar],
    col: &[ExactScalar],
    mode: GfMode,
    m: usize,
    n: usize,
) -> Result<Vec<ExactScalar>, DiagError> {
    assert!(m <= n && m >= 1);
    if row[0] != col[0] {
        return Err(DiagError::CornerMismatch);
    }
    Ok((m..=n).map(|d| value_at(row, col, d, mode)).collect())
}

/// Generating function 1 + sum_{i>=1} value_i t^i of the det/perm sequence:
/// the recurrence is guessed from the tail window [m..n] and the numerator is
/// reconciled against the full initial segment.
pub fn gf_family(
    row: &[ExactScalar],
    col: &[ExactScalar],
    mode: GfMode,
    m: usize,
    n: usize,
) -> Result<RatQ, DiagError> {
    let seq = value_sequence(row, col, mode, 1, n)?;
    let tail = &seq[m - 1..];
    let spec = guess_rec(tail).map_err(DiagError::Guess)?;
    // denominator from the recurrence; numerator truncated against the full
    // series 1 + sum seq[i] t^(i+1)
    let mut den = vec![qi(1)];
    for c in &spec.coeffs {
        den.push(-c.clone());
    }
    let den = Poly::new(den);
    let mut full = vec![qi(1)];
    full.extend(seq.iter().cloned());
    let series = Poly::new(full.clone());
    let dd = den.degree().unwrap_or(0);
    let num = den.mul(&series).truncated(dd + 1);
    let f = RatQ::new(num, den);
    // validate over the whole computed window
    let check = f
        .series_coeffs(full.len())
        .map_err(|_| DiagError::ValidationFailed("series"))?;
    if check != full {
        return Err(DiagError::ValidationFailed(match mode {
            GfMode::Det => "determinant",
            GfMode::Perm => "permanent",
        }));
    }
    Ok(f)
}

/// The band symbol of the family: entry value at diagonal offset o
/// (offset 0 = main diagonal, positive = above).
#[derive(Clone, PartialEq, Debug)]
pub struct Band {
    row: Vec<ExactScalar>,
    col: Vec<ExactScalar>,
}

impl Band {
    pub fn new(row: &[ExactScalar], col: &[ExactScalar]) -> Result<Self, DiagError> {
        if row.is_empty() || col.is_empty() || row[0] != col[0] {
            return Err(DiagError::CornerMismatch);
        }
        let mut row = row.to_vec();
        let mut col = col.to_vec();
        // prefixes are "up to the last nonzero entry"
        while row.len() > 1 && row.last().map_or(false, |c| c.is_zero()) {
            row.pop();
        }
        while col.len() > 1 && col.last().map_or(false, |c| c.is_zero()) {
            col.pop();
        }
        Ok(Band { row, col })
    }

    fn value(&self, o: i64) -> ExactScalar {
        if o >= 0 {
            self.row.get(o as usize).cloned().unwrap_or_else(|| qi(0))
        } else {
            self.col
                .get((-o) as usize)
                .cloned()
                .unwrap_or_else(|| qi(0))
        }
    }

    fn p(&self) -> i64 {
        (self.row.len() - 1) as i64
    }

    fn q(&self) -> i64 {
        (self.col.len() - 1) as i64
    }
}

/// A minor state under recursive cofactor expansion along the first row.
///
/// Every reachable minor of an almost-diagonal matrix is determined (up to
/// dimension) by the band offsets of its surviving first-row entries: the
/// first column is the band descending from the corner offset, and all other
/// rows continue the original band. Keying on offsets rather than entry
/// values lifts the paper's distinct-entry assumption.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MinorState {
    pub row_offsets: Vec<i64>,
}

impl MinorState {
    /// First-row entry values of the state.
    pub fn row_prefix(&self, band: &Band) -> Vec<ExactScalar> {
        self.row_offsets.iter().map(|&o| band.value(o)).collect()
    }

    /// First-column entry values (band descending from the corner to -q).
    pub fn col_prefix(&self, band: &Band) -> Vec<ExactScalar> {
        let top = self.row_offsets[0];
        (-band.q()..=top).rev().map(|o| band.value(o)).collect()
    }

    /// Concrete dim x dim matrix for this minor state: first row from the
    /// state's offsets, every later row the band shifted one diagonal down.
    pub fn instantiate(&self, band: &Band, dim: usize) -> Mat<ExactScalar> {
        Mat::from_fn(dim, dim, |i, j| {
            if j < self.row_offsets.len() || i > 0 {
                // column j corresponds to band offset row_offsets[j] in row 0
                // and continues beyond the stored prefix contiguously
                let col_off = if j < self.row_offsets.len() {
                    self.row_offsets[j]
                } else {
                    self.row_offsets[self.row_offsets.len() - 1]
                        + (j - (self.row_offsets.len() - 1)) as i64
                };
                band.value(col_off - i as i64)
            } else {
                qi(0)
            }
        })
    }
}

fn root_state(band: &Band) -> MinorState {
    MinorState {
        row_offsets: (0..=band.p()).collect(),
    }
}

/// One-step cofactor expansion along the first row: returns the signed
/// multipliers and child states. Children whose first column vanishes
/// (corner offset below -q) or whose multiplier is zero are dropped.
pub fn expand_minor(band: &Band, state: &MinorState, mode: GfMode) -> Vec<(ExactScalar, MinorState)> {
    let offs = &state.row_offsets;
    let m = offs.len();
    // the minor's second row: band one diagonal below each surviving column,
    // plus the next column to the right (same offset as the last entry)
    let mut out = Vec::new();
    for (j, &oj) in offs.iter().enumerate() {
        let a = band.value(oj);
        if a.is_zero() {
            continue;
        }
        let mult = if mode == GfMode::Det && j % 2 == 1 {
            -a
        } else {
            a
        };
        // child: delete row 1 and column j; surviving first row is the
        // second row at the remaining columns
        let mut child: Vec<i64> = Vec::with_capacity(m);
        for (i, &oi) in offs.iter().enumerate() {
            if i != j {
                child.push(oi - 1);
            }
        }
        child.push(offs[m - 1]); // the next column continues the band
        // trim trailing zero entries (but the last offset is p with a
        // nonzero band value, so only needed when the band top vanished)
        while child.len() > 1 && band.value(*child.last().unwrap()).is_zero() {
            child.pop();
        }
        if child[0] < -band.q() {
            continue; // empty first column: zero contribution
        }
        out.push((mult, MinorState { row_offsets: child }));
    }
    out
}

/// All states reachable from the root under cofactor expansion.
pub fn children_closure(band: &Band) -> Vec<MinorState> {
    let root = root_state(band);
    let mut seen = std::collections::BTreeSet::new();
    let mut todo = vec![root.clone()];
    seen.insert(root);
    while let Some(s) = todo.pop() {
        for (_, child) in expand_minor(band, &s, GfMode::Det) {
            if seen.insert(child.clone()) {
                todo.push(child);
            }
        }
    }
    seen.into_iter().collect()
}

/// Generating function by the symbolic dynamic program: each state's series
/// A_s(t) satisfies A_s = [s = root] + t * sum over children of mult * A_c;
/// the root component is 1 + sum_{k>=1} det_k t^k.
pub fn gf_symbolic(
    row: &[ExactScalar],
    col: &[ExactScalar],
    mode: GfMode,
) -> Result<RatQ, DiagError> {
    let band = Band::new(row, col)?;
    let root = root_state(&band);

    let mut keys = std::collections::BTreeSet::new();
    let mut todo = vec![root.clone()];
    keys.insert(root.clone());
    while let Some(s) = todo.pop() {
        for (_, child) in expand_minor(&band, &s, mode) {
            if keys.insert(child.clone()) {
                todo.push(child);
            }
        }
    }

    let keys: Vec<MinorState> = keys.into_iter().collect();
    let index: BTreeMap<&MinorState, usize> = keys.iter().zip(0..).collect();
    let n = keys.len();
    let t = RatQ::new(Poly::monomial(qi(1), 1), Poly::one());

    // rows: A_i - t * sum mult_ij A_j = [i = root]
    let mut a = Mat::from_fn(n, n, |i, j| {
        if i == j {
            RatQ::one()
        } else {
            RatQ::zero()
        }
    });
    for (i, k) in keys.iter().enumerate() {
        for (mult, child) in expand_minor(&band, k, mode) {
            let j = index[&child];
            let term = t.mul(&RatQ::constant(mult));
            let cur = a.get(i, j).clone();
            a.set(i, j, cur.sub(&term));
        }
    }
    let b: Vec<RatQ> = keys
        .iter()
        .map(|k| if *k == root { RatQ::one() } else { RatQ::zero() })
        .collect();
    match a.solve_linear(&b).map_err(|_| DiagError::SingularSystem)? {
        SolveOutcome::Unique(x) => Ok(x[index[&root]].clone()),
        _ => Err(DiagError::SingularSystem),
    }
}
