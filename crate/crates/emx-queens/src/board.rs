//! Discrete board evaluation: bitboard black-cell counting, rasterization of
//! continuous configurations, and exhaustive small-board search.

use crate::family::{white_polygons, ConfigFamily, QueensError};

/// A set of white cells on an n x n board, stored as a bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoardPlacement {
    pub n: usize,
    bits: Vec<u64>,
}

impl BoardPlacement {
    pub fn new(n: usize) -> Self {
        BoardPlacement {
            n,
            bits: vec![0; (n * n).div_ceil(64)],
        }
    }

    fn idx(&self, col: usize, row: usize) -> usize {
        row * self.n + col
    }

    pub fn set(&mut self, col: usize, row: usize) {
        let i = self.idx(col, row);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, col: usize, row: usize) -> bool {
        let i = self.idx(col, row);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for row in 0..self.n {
            for col in 0..self.n {
                if self.get(col, row) {
                    out.push((col, row));
                }
            }
        }
        out
    }
}

/// Number of cells sharing no row, column, or diagonal with any white cell.
pub fn discrete_black_count(p: &BoardPlacement) -> usize {
    let n = p.n;
    let mut rows = vec![false; n];
    let mut cols = vec![false; n];
    let mut diag = vec![false; 2 * n]; // col + row
    let mut anti = vec![false; 2 * n]; // col - row + n
    for (c, r) in p.cells() {
        cols[c] = true;
        rows[r] = true;
        diag[c + r] = true;
        anti[c + n - r] = true;
    }
    let mut count = 0;
    for r in 0..n {
        for c in 0..n {
            if !rows[r] && !cols[c] && !diag[c + r] && !anti[c + n - r] {
                count += 1;
            }
        }
    }
    count
}

/// True if the point lies in the closed convex polygon.
fn point_in_convex(poly: &[(f64, f64)], x: f64, y: f64) -> bool {
    let mut pos = false;
    let mut neg = false;
    for i in 0..poly.len() {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % poly.len()];
        let cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1);
        if cross > 1e-12 {
            pos = true;
        }
        if cross < -1e-12 {
            neg = true;
        }
        if pos && neg {
            return false;
        }
    }
    true
}

/// Marks cell (i, j) white iff its center lies inside the closed white region.
pub fn rasterize(
    family: ConfigFamily,
    params: &[f64],
    n: usize,
) -> Result<BoardPlacement, QueensError> {
    let polys = white_polygons(family, params)?;
    let mut board = BoardPlacement::new(n);
    for row in 0..n {
        let y = (row as f64 + 0.5) / n as f64;
        for col in 0..n {
            let x = (col as f64 + 0.5) / n as f64;
            if polys.iter().any(|p| point_in_convex(p, x, y)) {
                board.set(col, row);
            }
        }
    }
    Ok(board)
}

/// The eight symmetry maps of the board, as cell-index permutations.
fn symmetry_maps(n: usize) -> Vec<Vec<usize>> {
    let transforms: [fn(usize, usize, usize) -> (usize, usize); 8] = [
        |c, r, _| (c, r),
        |c, r, n| (n - 1 - c, r),
        |c, r, n| (c, n - 1 - r),
        |c, r, n| (n - 1 - c, n - 1 - r),
        |c, r, _| (r, c),
        |c, r, n| (n - 1 - r, c),
        |c, r, n| (r, n - 1 - c),
        |c, r, n| (n - 1 - r, n - 1 - c),
    ];
    transforms
        .iter()
        .map(|t| {
            (0..n * n)
                .map(|i| {
                    let (c, r) = (i % n, i / n);
                    let (c2, r2) = t(c, r, n);
                    r2 * n + c2
                })
                .collect()
        })
        .collect()
}

const EXHAUSTIVE_MAX: usize = 5;

/// a(n) for n <= 5: the maximum m such that m white and m black queens can be
/// placed with no queen attacking one of the opposite color. Branch-and-bound
/// over white subsets of size m (m descending), pruning by the monotone black
/// count and by a first-cell symmetry canonicity test.
pub fn exhaustive_small(n: usize) -> Result<usize, QueensError> {
    if n > EXHAUSTIVE_MAX {
        return Err(QueensError::BoardTooLarge(n, EXHAUSTIVE_MAX));
    }
    let cells = n * n;
    let syms = symmetry_maps(n);
    // attack mask per cell
    let mask: Vec<u64> = (0..cells)
        .map(|i| {
            let (c, r) = (i % n, i / n);
            let mut m = 0u64;
            for j in 0..cells {
                let (c2, r2) = (j % n, j / n);
                if c2 == c || r2 == r || c2 + r2 == c + r || c2 + n - r2 == c + n - r {
                    m |= 1 << j;
                }
            }
            m
        })
        .collect();

    // true if some white set of size m leaves >= m black cells
    let exists = |m: usize| -> bool {
        if m == 0 {
            return true;
        }
        fn dfs(
            next: usize,
            chosen: usize,
            first: usize,
            coverage: u64,
            m: usize,
            cells: usize,
            mask: &[u64],
            syms: &[Vec<usize>],
        ) -> bool {
            if chosen == m {
                return cells - coverage.count_ones() as usize >= m;
            }
            if cells - (coverage.count_ones() as usize) < m {
                return false;
            }
            for c in next..cells {
                if cells - c < m - chosen {
                    return false;
                }
                // canonical-representative pruning: no symmetric image of any
                // chosen cell may precede the first chosen cell
                let first2 = if chosen == 0 { c } else { first };
                if syms.iter().any(|s| s[c] < first2) {
                    continue;
                }
                if dfs(
                    c + 1,
                    chosen + 1,
                    first2,
                    coverage | mask[c],
                    m,
                    cells,
                    mask,
                    syms,
                ) {
                    return true;
                }
            }
            false
        }
        dfs(0, 0, 0, 0, m, cells, &mask, &syms)
    };

    let mut m = cells / 2;
    while m > 0 && !exists(m) {
        m -= 1;
    }
    Ok(m)
}
