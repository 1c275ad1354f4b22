//! Grid graphs and G x P_n products: spanning-tree and two-component-forest
//! counting via exact Laplacian determinants, joint resistance, and
//! (bivariate) generating functions obtained by recurrence guessing.

use emx_core::scalar::{q, qi, ExactScalar};
use emx_core::{Mat, Poly, RatFun, RatQ, RatQ2};
use emx_guess::{c_to_r_offset, guess_rec_opts, GuessError};
use num_bigint::BigInt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EdgeTag {
    Horizontal,
    Vertical,
    Other,
}

/// Undirected labelled graph; vertices are 1-based, edges satisfy u < v.
#[derive(Clone, Debug)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, EdgeTag)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, EdgeTag)>) -> Self {
        let mut seen = std::collections::HashSet::new();
        for &(u, v, _) in &edges {
            assert!(u < v && v <= vertex_count, "edge ({u},{v}) out of range");
            assert!(seen.insert((u, v)), "duplicate edge ({u},{v})");
        }
        Graph {
            vertex_count,
            edges,
        }
    }

    /// Integer Laplacian: degrees on the diagonal, -1 per edge.
    pub fn laplacian(&self) -> Mat<BigInt> {
        let n = self.vertex_count;
        let mut m: Mat<BigInt> = Mat::zeros(n, n);
        for &(u, v, _) in &self.edges {
            let (u, v) = (u - 1, v - 1);
            m.set(u, v, BigInt::from(-1));
            m.set(v, u, BigInt::from(-1));
            let du = m.get(u, u) + BigInt::from(1);
            m.set(u, u, du);
            let dv = m.get(v, v) + BigInt::from(1);
            m.set(v, v, dv);
        }
        m
    }

    /// Laplacian with vertical edges carrying weight v (a polynomial
    /// indeterminate); weighted degrees on the diagonal.
    pub fn weighted_laplacian(&self) -> Mat<Poly<ExactScalar>> {
        let n = self.vertex_count;
        let mut m: Mat<Poly<ExactScalar>> = Mat::zeros(n, n);
        for &(u, v, tag) in &self.edges {
            let w = if tag == EdgeTag::Vertical {
                Poly::x()
            } else {
                Poly::one()
            };
            let (u, v) = (u - 1, v - 1);
            m.set(u, v, m.get(u, v).sub(&w));
            m.set(v, u, m.get(v, u).sub(&w));
            m.set(u, u, m.get(u, u).add(&w));
            m.set(v, v, m.get(v, v).add(&w));
        }
        m
    }
}

/// The k x n grid graph G_k(n), vertices v_{i,j} numbered column-major
/// ((j-1)k + i). Edges with differing i are vertical, differing j horizontal.
pub fn grid_graph(k: usize, n: usize) -> Graph {
    assert!(k >= 1 && n >= 1);
    let id = |i: usize, j: usize| (j - 1) * k + i;
    let mut edges = Vec::new();
    for j in 1..=n {
        for i in 1..=k {
            if i < k {
                edges.push((id(i, j), id(i + 1, j), EdgeTag::Vertical));
            }
            if j < n {
                edges.push((id(i, j), id(i, j + 1), EdgeTag::Horizontal));
            }
        }
    }
    edges.sort();
    Graph::new(k * n, edges)
}

/// n layered copies of G joined vertex-wise: copies keep G's edges (tagged
/// `Other`), the joining edges between consecutive layers are `Vertical`.
pub fn product_with_path(g: &Graph, n: usize) -> Graph {
    assert!(n >= 1);
    let m = g.vertex_count;
    let mut edges = Vec::new();
    for layer in 0..n {
        for &(u, v, _) in &g.edges {
            edges.push((layer * m + u, layer * m + v, EdgeTag::Other));
        }
        if layer + 1 < n {
            for u in 1..=m {
                edges.push((layer * m + u, (layer + 1) * m + u, EdgeTag::Vertical));
            }
        }
    }
    edges.sort();
    Graph::new(m * n, edges)
}

/// Number of spanning trees (Matrix Tree Theorem: any Laplacian cofactor).
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    if g.vertex_count == 1 {
        return BigInt::from(1);
    }
    let lap = g.laplacian();
    let last = g.vertex_count - 1;
    lap.minor(&[last], &[last]).determinant().unwrap()
}

/// Spanning forests with exactly two components separating u from v
/// (Laplacian with rows/columns u and v deleted).
pub fn two_forest_count(g: &Graph, u: usize, v: usize) -> Result<BigInt, String> {
    if u == v {
        return Err("the two terminals must be distinct".to_string());
    }
    let lap = g.laplacian();
    Ok(lap.minor(&[u - 1, v - 1], &[u - 1, v - 1]).determinant().unwrap())
}

/// Exact joint resistance of G_k(n) between corners [1,1] and [k,n]
/// (unit resistors on every edge): twoForest / spanningTrees.
pub fn joint_resistance(k: usize, n: usize) -> ExactScalar {
    assert!(k * n >= 2);
    let g = grid_graph(k, n);
    let forests = two_forest_count(&g, 1, k * n).unwrap();
    let trees = spanning_tree_count(&g);
    ExactScalar::new(forests, trees)
}

/// Doyle's constant C(k) = 2 * sum_{j=1..k-1} (j/k)^2 in the bound
/// (n-1)/k <= R(k,n) <= (n-1)/k + C(k).
pub fn doyle_constant(k: usize) -> ExactScalar {
    let mut acc = qi(0);
    for j in 1..k {
        acc += q((j * j) as i64, (k * k) as i64);
    }
    acc * qi(2)
}

/// Generating function over a data window, with the window recorded.
#[derive(Clone, Debug)]
pub struct GridGF {
    pub k: usize,
    pub gf: RatQ,
    pub window: (usize, usize),
}

fn guess_gf_from_counts(
    counts: &[ExactScalar],
    symmetric: bool,
) -> Result<RatQ, GuessError> {
    let spec = match guess_rec_opts(counts, symmetric) {
        Ok(s) => s,
        Err(_) if symmetric => guess_rec_opts(counts, false)?,
        Err(e) => return Err(e),
    };
    c_to_r_offset(&spec, 1)
}

/// F_k(t) = sum_{n>=1} s(k,n) t^n by determinant data + guessing.
/// Window sized from the expected denominator degree 2^(k-1); grows
/// geometrically on failure.
pub fn gf_spanning_grid(k: usize) -> Result<GridGF, GuessError> {
    assert!(k <= 7, "desk-scale cap");
    let mut window = 2 * (1 << (k - 1)) + 6;
    for _ in 0..3 {
        let counts: Vec<ExactScalar> = (1..=window)
            .map(|n| ExactScalar::from(spanning_tree_count(&grid_graph(k, n))))
            .collect();
        match guess_gf_from_counts(&counts, true) {
            Ok(gf) => {
                return Ok(GridGF {
                    k,
                    gf,
                    window: (1, window),
                })
            }
            Err(_) => window *= 2,
        }
    }
    Err(GuessError::Fail)
}

/// Generating function of two-component forest counts separating the
/// corners of G_k(n).
pub fn gf_two_forest_grid(k: usize) -> Result<RatQ, GuessError> {
    assert!(k <= 4, "desk-scale cap");
    // denominator degree is deg(D_k^2 * C_k); size the window accordingly
    let expected = match k {
        1 => 3,
        2 => 5,
        3 => 12,
        _ => 28,
    };
    let mut window = 2 * expected + 6;
    for _ in 0..3 {
        let counts: Vec<ExactScalar> = (1..=window)
            .map(|n| {
                let g = grid_graph(k, n);
                if k * n < 2 {
                    qi(0)
                } else {
                    ExactScalar::from(two_forest_count(&g, 1, k * n).unwrap())
                }
            })
            .collect();
        match guess_gf_from_counts(&counts, false) {
            Ok(gf) => return Ok(gf),
            Err(_) => window *= 2,
        }
    }
    Err(GuessError::Fail)
}

/// Vertical-edge weighted spanning-tree polynomial:
/// sum over spanning trees T of v^(number of vertical edges in T).
pub fn vertical_weighted_count(k: usize, n: usize) -> Poly<ExactScalar> {
    let g = grid_graph(k, n);
    if g.vertex_count == 1 {
        return Poly::one();
    }
    let lap = g.weighted_laplacian();
    let last = g.vertex_count - 1;
    lap.minor(&[last], &[last]).determinant().unwrap()
}

/// Bivariate generating function g_k(v,t) = sum_{n>=1} Ver_{k,n}(v) t^n,
/// guessed over the field of rational functions in v.
pub fn ver_gf(k: usize) -> Result<RatQ2, GuessError> {
    assert!(k <= 4, "desk-scale cap");
    let mut window = 2 * (1 << (k - 1)) + 6;
    for _ in 0..3 {
        let counts: Vec<RatQ> = (1..=window)
            .map(|n| RatFun::from_poly(vertical_weighted_count(k, n)))
            .collect();
        let spec = match guess_rec_opts(&counts, false) {
            Ok(s) => s,
            Err(_) => {
                window *= 2;
                continue;
            }
        };
        return c_to_r_offset(&spec, 1);
    }
    Err(GuessError::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly<ExactScalar> {
        Poly::new(v.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn grid_graph_shapes() {
        let g = grid_graph(2, 2);
        assert_eq!(g.vertex_count, 4);
        assert_eq!(g.edges.len(), 4);
        let vert = g
            .edges
            .iter()
            .filter(|e| e.2 == EdgeTag::Vertical)
            .count();
        assert_eq!(vert, 2);

        let path = grid_graph(1, 5);
        assert_eq!(path.edges.len(), 4);
        assert!(path.edges.iter().all(|e| e.2 == EdgeTag::Horizontal));

        let col = grid_graph(3, 1);
        assert_eq!(col.edges.len(), 2);
        assert!(col.edges.iter().all(|e| e.2 == EdgeTag::Vertical));
    }

    #[test]
    fn product_with_path_examples() {
        let k2 = Graph::new(2, vec![(1, 2, EdgeTag::Other)]);
        let prod = product_with_path(&k2, 4);
        let grid = grid_graph(2, 4);
        assert_eq!(prod.vertex_count, grid.vertex_count);
        // isomorphic via identity on this vertex numbering
        let mut a: Vec<(usize, usize)> = prod.edges.iter().map(|e| (e.0, e.1)).collect();
        let mut b: Vec<(usize, usize)> = grid.edges.iter().map(|e| (e.0, e.1)).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);

        let tri = Graph::new(
            3,
            vec![
                (1, 2, EdgeTag::Other),
                (1, 3, EdgeTag::Other),
                (2, 3, EdgeTag::Other),
            ],
        );
        assert_eq!(product_with_path(&tri, 1).edges.len(), 3);
        let tri2 = product_with_path(&tri, 2);
        assert_eq!(tri2.vertex_count, 6);
        assert_eq!(tri2.edges.len(), 9);
    }

    #[test]
    fn spanning_counts() {
        assert_eq!(spanning_tree_count(&grid_graph(2, 3)), BigInt::from(15));
        assert_eq!(spanning_tree_count(&grid_graph(2, 2)), BigInt::from(4));
        let tree = Graph::new(
            4,
            vec![
                (1, 2, EdgeTag::Other),
                (1, 3, EdgeTag::Other),
                (3, 4, EdgeTag::Other),
            ],
        );
        assert_eq!(spanning_tree_count(&tree), BigInt::from(1));
        let k4 = Graph::new(
            4,
            vec![
                (1, 2, EdgeTag::Other),
                (1, 3, EdgeTag::Other),
                (1, 4, EdgeTag::Other),
                (2, 3, EdgeTag::Other),
                (2, 4, EdgeTag::Other),
                (3, 4, EdgeTag::Other),
            ],
        );
        assert_eq!(spanning_tree_count(&k4), BigInt::from(16));
    }

    #[test]
    fn cofactor_choice_is_irrelevant() {
        let g = grid_graph(3, 3);
        let lap = g.laplacian();
        let d0 = lap.minor(&[0], &[0]).determinant().unwrap();
        for i in 1..g.vertex_count {
            assert_eq!(lap.minor(&[i], &[i]).determinant().unwrap(), d0);
        }
    }

    #[test]
    fn two_forest_examples() {
        let c4 = grid_graph(2, 2);
        assert_eq!(two_forest_count(&c4, 1, 4).unwrap(), BigInt::from(4));
        let k2 = Graph::new(2, vec![(1, 2, EdgeTag::Other)]);
        assert_eq!(two_forest_count(&k2, 1, 2).unwrap(), BigInt::from(1));
        let p3 = grid_graph(1, 3);
        assert_eq!(two_forest_count(&p3, 1, 3).unwrap(), BigInt::from(2));
        assert!(two_forest_count(&p3, 2, 2).is_err());
    }

    #[test]
    fn resistance_examples() {
        assert_eq!(joint_resistance(1, 2), qi(1));
        assert_eq!(joint_resistance(2, 2), qi(1));
        assert_eq!(doyle_constant(2), q(1, 2));
        let r = joint_resistance(2, 12);
        let lo = q(11, 2);
        let hi = lo.clone() + doyle_constant(2);
        assert!(lo <= r && r <= hi);
    }

    #[test]
    fn gf_small_grids() {
        let f1 = gf_spanning_grid(1).unwrap();
        assert_eq!(f1.gf, RatQ::new(p(&[0, 1]), p(&[1, -1])));
        let f2 = gf_spanning_grid(2).unwrap();
        assert_eq!(f2.gf, RatQ::new(p(&[0, 1]), p(&[1, -4, 1])));
    }

    #[test]
    fn vertical_weighted_examples() {
        assert_eq!(vertical_weighted_count(2, 2), p(&[0, 2, 2])); // 2v^2 + 2v
        assert_eq!(vertical_weighted_count(1, 4), p(&[1]));
        assert_eq!(vertical_weighted_count(2, 1), p(&[0, 1]));
        // v = 1 specializes to the plain count
        let w = vertical_weighted_count(3, 4);
        assert_eq!(
            w.eval(&qi(1)),
            ExactScalar::from(spanning_tree_count(&grid_graph(3, 4)))
        );
    }

    #[test]
    fn ver_gf_k2() {
        let g2 = ver_gf(2).unwrap();
        // vt / (1 - (2v+2)t + t^2)
        let vpoly = |v: &[i64]| RatFun::from_poly(p(v));
        let expected = RatQ2::new(
            Poly::new(vec![vpoly(&[0]), vpoly(&[0, 1])]),
            Poly::new(vec![vpoly(&[1]), vpoly(&[-2, -2]), vpoly(&[1])]),
        );
        assert_eq!(g2, expected);
        // specialization v = 1 recovers F_2
        let at1 = g2.map_coeffs(|c| c.eval(&qi(1)));
        assert_eq!(at1, gf_spanning_grid(2).unwrap().gf);
    }
}
