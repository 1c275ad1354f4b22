//! Peaceable-queens configuration families on the unit square: feasibility
//! predicates, exact/float area formulas, and the region polygons.

use emx_core::scalar::{q, scalar_to_f64, ExactScalar};
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QueensError {
    #[error("infeasible parameters: violated constraint `{0}`")]
    Infeasible(String),
    #[error("wrong parameter count for {family}: expected {expected}, got {got}")]
    ParamCount {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("board size {0} too large for exhaustive search (max {1})")]
    BoardTooLarge(usize, usize),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("no feasible starting point found")]
    NoFeasibleStart,
}

/// White-queen configuration families. Parameters are passed separately as a
/// slice of length `param_count()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigFamily {
    /// Two generalized pentagons with parameters (a,b,c,d,e,f,g).
    JubinTwoPentagons,
    /// Corner rectangle with sides (a,b).
    Rectangle,
    /// Corner parallelogram with parameters (a,b).
    Parallelogram,
    /// Corner isosceles right triangle with leg a.
    Triangle,
    /// Corner hexagon with parameters (a,b,c,d).
    Hexagon,
    /// Two identical squares: side a, right square offset s.
    TwoSquares,
    /// Two identical triangles with the same orientation: leg a, offset s.
    TwoTrianglesSame,
    /// Two identical triangles with opposite orientations: leg a.
    TwoTrianglesOpposite,
    /// A square and a triangle with the same side length: side a, offset s.
    SquarePlusTriangle,
}

pub const ALL_FAMILIES: [ConfigFamily; 9] = [
    ConfigFamily::JubinTwoPentagons,
    ConfigFamily::Rectangle,
    ConfigFamily::Parallelogram,
    ConfigFamily::Triangle,
    ConfigFamily::Hexagon,
    ConfigFamily::TwoSquares,
    ConfigFamily::TwoTrianglesSame,
    ConfigFamily::TwoTrianglesOpposite,
    ConfigFamily::SquarePlusTriangle,
];

impl ConfigFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ConfigFamily::JubinTwoPentagons => "jubin",
            ConfigFamily::Rectangle => "rectangle",
            ConfigFamily::Parallelogram => "parallelogram",
            ConfigFamily::Triangle => "triangle",
            ConfigFamily::Hexagon => "hexagon",
            ConfigFamily::TwoSquares => "two-squares",
            ConfigFamily::TwoTrianglesSame => "two-triangles-same",
            ConfigFamily::TwoTrianglesOpposite => "two-triangles-opposite",
            ConfigFamily::SquarePlusTriangle => "square-plus-triangle",
        }
    }

    pub fn parse(s: &str) -> Result<Self, QueensError> {
        ALL_FAMILIES
            .iter()
            .find(|f| f.name() == s)
            .copied()
            .ok_or_else(|| QueensError::UnknownFamily(s.to_string()))
    }

    pub fn param_count(&self) -> usize {
        self.param_names().len()
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            ConfigFamily::JubinTwoPentagons => &["a", "b", "c", "d", "e", "f", "g"],
            ConfigFamily::Rectangle | ConfigFamily::Parallelogram => &["a", "b"],
            ConfigFamily::Triangle | ConfigFamily::TwoTrianglesOpposite => &["a"],
            ConfigFamily::Hexagon => &["a", "b", "c", "d"],
            ConfigFamily::TwoSquares
            | ConfigFamily::TwoTrianglesSame
            | ConfigFamily::SquarePlusTriangle => &["a", "s"],
        }
    }
}

/// Minimal arithmetic needed by the area formulas; implemented for `f64`
/// (optimization) and `ExactScalar` (exact evaluation at rational points).
pub trait AreaScalar:
    Clone + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn ratio(num: i64, den: i64) -> Self;
    fn zero() -> Self {
        Self::ratio(0, 1)
    }
    fn max0(self) -> Self {
        if self > Self::zero() {
            self
        } else {
            Self::zero()
        }
    }
}

impl AreaScalar for f64 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl AreaScalar for ExactScalar {
    fn ratio(num: i64, den: i64) -> Self {
        q(num, den)
    }
}

/// White and black areas; `flagged` marks an evaluation outside the window in
/// which the piecewise black-area formula is known to be valid.
#[derive(Clone, Debug, PartialEq)]
pub struct AreaPair<T> {
    pub white: T,
    pub black: T,
    pub flagged: bool,
}

fn check_params(family: ConfigFamily, got: usize) -> Result<(), QueensError> {
    if got != family.param_count() {
        return Err(QueensError::ParamCount {
            family: family.name(),
            expected: family.param_count(),
            got,
        });
    }
    Ok(())
}

/// Feasibility constraints in `g(p) <= 0` form, as (label, value) pairs.
pub fn constraint_values(family: ConfigFamily, p: &[f64]) -> Vec<(String, f64)> {
    let mut c: Vec<(String, f64)> = Vec::new();
    for (i, name) in family.param_names().iter().enumerate() {
        c.push((format!("{name} >= 0"), -p[i]));
        c.push((format!("{name} <= 1"), p[i] - 1.0));
    }
    match family {
        ConfigFamily::JubinTwoPentagons => {
            let (a, b, cc, d, e, f, g) = (p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
            let mid_x = (g + d - b) / 2.0 + cc - f;
            let mid_y = (g + d + b) / 2.0 + cc - f;
            let corner_y = g + 2.0 * cc - 2.0 * f + d - a;
            let pairs: [(&str, f64); 15] = [
                ("e <= a", e - a),
                ("e <= b", e - b),
                ("a+b-e <= 1", a + b - e - 1.0),
                ("f <= c", f - cc),
                ("2f <= c+d", 2.0 * f - cc - d),
                ("c-f+d <= 1", cc - f + d - 1.0),
                ("a <= g", a - g),
                ("d <= g", d - g),
                ("g+c <= 1", g + cc - 1.0),
                ("g+b <= 1", g + b - 1.0),
                ("g+2c-2f+d-a <= 1", corner_y - 1.0),
                ("pentagon notch above its left wall", mid_y - corner_y),
                ("pentagon notch above its right wall", mid_y - (g + b)),
                ("a <= notch x <= g", (a - mid_x).max(mid_x - g)),
                ("a+b-e <= g+c", a + b - e - (g + cc)),
            ];
            for (n, v) in pairs {
                c.push((n.to_string(), v));
            }
            c.push(("c+d <= a+b-e".to_string(), cc + d - (a + b - e)));
            c.push(("a+b-e+g-d <= 1".to_string(), a + b - e + g - d - 1.0));
        }
        ConfigFamily::Rectangle => {}
        ConfigFamily::Parallelogram => {
            c.push(("a+b <= 1".to_string(), p[0] + p[1] - 1.0));
        }
        ConfigFamily::Triangle | ConfigFamily::TwoTrianglesOpposite => {
            if family == ConfigFamily::TwoTrianglesOpposite {
                c.push(("a <= 1/2".to_string(), p[0] - 0.5));
            }
        }
        ConfigFamily::Hexagon => {
            let (a, b, cc, d) = (p[0], p[1], p[2], p[3]);
            c.push(("a+b <= 1".to_string(), a + b - 1.0));
            c.push(("b+c <= 1".to_string(), b + cc - 1.0));
            c.push(("d <= a+b".to_string(), d - a - b));
            c.push(("d <= b+c".to_string(), d - b - cc));
            c.push(("a+b+c <= 1".to_string(), a + b + cc - 1.0));
            c.push(("a+2b+c-d <= 1".to_string(), a + 2.0 * b + cc - d - 1.0));
        }
        ConfigFamily::TwoSquares
        | ConfigFamily::TwoTrianglesSame
        | ConfigFamily::SquarePlusTriangle => {
            let (a, s) = (p[0], p[1]);
            c.push(("a <= 1/2".to_string(), a - 0.5));
            c.push(("a <= s".to_string(), a - s));
            c.push(("s <= 1-a".to_string(), s - (1.0 - a)));
        }
    }
    c
}

/// Checks feasibility; on failure names the first violated constraint.
pub fn feasible(family: ConfigFamily, p: &[f64]) -> Result<(), QueensError> {
    check_params(family, p.len())?;
    for (name, v) in constraint_values(family, p) {
        if v > 1e-12 {
            return Err(QueensError::Infeasible(name));
        }
    }
    Ok(())
}

/// Total constraint violation, zero iff feasible (used as an optimizer penalty).
pub fn violation(family: ConfigFamily, p: &[f64]) -> f64 {
    constraint_values(family, p)
        .iter()
        .map(|(_, v)| v.max(0.0))
        .sum()
}

/// True if the parameters are inside the window where the piecewise
/// black-area formula is known to hold (always true for exact families).
fn in_validity_window(family: ConfigFamily, p: &[f64]) -> bool {
    let win = |s: f64, lo: f64, hi: f64| s >= lo && s <= hi;
    match family {
        ConfigFamily::TwoSquares => win(p[1], 0.24, 0.76),
        ConfigFamily::TwoTrianglesSame => win(p[1], 0.32, 0.68),
        ConfigFamily::SquarePlusTriangle => win(p[1], 0.28, 0.72),
        _ => true,
    }
}

fn areas_generic<T: AreaScalar>(family: ConfigFamily, p: &[T]) -> (T, T) {
    let r = T::ratio;
    match family {
        ConfigFamily::JubinTwoPentagons => {
            let (a, b, c, d, e, f, g) = (
                p[0].clone(),
                p[1].clone(),
                p[2].clone(),
                p[3].clone(),
                p[4].clone(),
                p[5].clone(),
                p[6].clone(),
            );
            let white = a.clone() * b.clone() - r(1, 2) * e.clone() * e.clone()
                + c.clone() * d.clone()
                + r(1, 2) * c.clone() * c.clone()
                - f.clone() * f.clone();
            let black = r(-1, 1) * a.clone() - r(3, 4) * d.clone() * d.clone() + r(2, 1) * g.clone()
                - d.clone()
                - c.clone() * d.clone()
                - a.clone() * b.clone()
                - f.clone() * f.clone()
                - r(1, 2) * e.clone() * e.clone()
                - r(3, 2) * c.clone() * c.clone()
                + r(2, 1) * b.clone() * c.clone()
                - r(2, 1) * a.clone() * f.clone()
                + r(3, 1) * a.clone() * c.clone()
                + r(2, 1) * a.clone() * d.clone()
                + r(2, 1) * c.clone() * f.clone()
                - e.clone() * c.clone()
                - e.clone() * d.clone()
                + b.clone() * e.clone()
                + a.clone() * e.clone()
                - b.clone() * f.clone()
                + f.clone() * d.clone()
                + r(3, 2) * b.clone() * d.clone()
                - a.clone() * a.clone()
                - r(3, 4) * b.clone() * b.clone()
                - r(2, 1) * g.clone() * c.clone()
                + r(1, 2) * g.clone() * d.clone()
                - r(1, 2) * g.clone() * b.clone()
                + a.clone() * g.clone()
                + g.clone() * f.clone()
                - r(7, 4) * g.clone() * g.clone();
            (white, black)
        }
        ConfigFamily::Rectangle | ConfigFamily::Parallelogram => {
            let (a, b) = (p[0].clone(), p[1].clone());
            let gap = (r(1, 1) - a.clone() - b.clone()).max0();
            (a * b, gap.clone() * gap)
        }
        ConfigFamily::Triangle => {
            let a = p[0].clone();
            let ca = r(1, 1) - a.clone();
            (r(1, 2) * a.clone() * a, r(1, 2) * ca.clone() * ca)
        }
        ConfigFamily::Hexagon => {
            let (a, b, c, d) = (p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone());
            let white = (a.clone() + b.clone()) * (b.clone() + c.clone())
                - r(1, 2) * (b.clone() * b.clone() + d.clone() * d.clone());
            let u = r(1, 1) - a.clone() - b.clone() - c.clone();
            let v = r(1, 1) - a - r(2, 1) * b - c + d;
            let black = r(1, 2) * u.clone() * u + r(1, 2) * v.clone() * v;
            (white, black)
        }
        ConfigFamily::TwoSquares => {
            let (a, s) = (p[0].clone(), p[1].clone());
            let u = s.clone() - a.clone();
            let v = r(1, 1) - s.clone() - a.clone();
            let spill1 = (r(1, 1) - s.clone() - r(2, 1) * a.clone()).max0();
            let spill2 = (s.clone() - r(2, 1) * a.clone()).max0();
            let black = u.clone() * v.clone()
                + r(1, 4) * u.clone() * u
                + spill1.clone() * spill1
                + spill2 * v;
            (r(2, 1) * a.clone() * a, black)
        }
        ConfigFamily::TwoTrianglesSame => {
            let (a, s) = (p[0].clone(), p[1].clone());
            let u = s.clone() - a.clone();
            let v = r(1, 1) - s.clone() - a.clone();
            let spill = (r(1, 1) - s - r(2, 1) * a.clone()).max0();
            let black = r(2, 1) * u.clone() * v.clone()
                + r(1, 2) * u.clone() * u
                + r(1, 2) * v.clone() * v
                + r(1, 2) * spill.clone() * spill;
            (a.clone() * a, black)
        }
        ConfigFamily::TwoTrianglesOpposite => {
            let a = p[0].clone();
            (a.clone() * a.clone(), r(1, 4) - a.clone() * a)
        }
        ConfigFamily::SquarePlusTriangle => {
            let (a, s) = (p[0].clone(), p[1].clone());
            let u = s.clone() - a.clone();
            let v = r(1, 1) - s.clone() - a.clone();
            let spill = (r(1, 1) - s - r(2, 1) * a.clone()).max0();
            let black =
                r(2, 1) * u.clone() * v + r(1, 4) * u.clone() * u + spill.clone() * spill;
            (r(3, 2) * a.clone() * a, black)
        }
    }
}

/// Exact areas at rational parameters.
pub fn areas_exact(
    family: ConfigFamily,
    p: &[ExactScalar],
) -> Result<AreaPair<ExactScalar>, QueensError> {
    check_params(family, p.len())?;
    let pf: Vec<f64> = p.iter().map(scalar_to_f64).collect();
    feasible(family, &pf)?;
    let (white, black) = areas_generic(family, p);
    Ok(AreaPair {
        white,
        black,
        flagged: !in_validity_window(family, &pf),
    })
}

/// Floating-point areas.
pub fn areas(family: ConfigFamily, p: &[f64]) -> Result<AreaPair<f64>, QueensError> {
    feasible(family, p)?;
    Ok(areas_unchecked(family, p))
}

/// Floating-point areas without the feasibility check (optimizer inner loop).
pub fn areas_unchecked(family: ConfigFamily, p: &[f64]) -> AreaPair<f64> {
    let (white, black) = areas_generic(family, p);
    AreaPair {
        white,
        black,
        flagged: !in_validity_window(family, p),
    }
}

/// The white region as a list of convex polygons (float vertices).
pub fn white_polygons(family: ConfigFamily, p: &[f64]) -> Result<Vec<Vec<(f64, f64)>>, QueensError> {
    feasible(family, p)?;
    let polys = match family {
        ConfigFamily::JubinTwoPentagons => {
            let (a, b, c, d, e, f, g) = (p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
            vec![
                vec![
                    (0.0, 0.0),
                    (a, a),
                    (a, a + b - e),
                    (a - e, a + b - e),
                    (0.0, b),
                ],
                vec![
                    (g, 0.0),
                    (g + c, 0.0),
                    (g + c, c - 2.0 * f + d),
                    (g + c - f, c - f + d),
                    (g, d),
                ],
            ]
        }
        ConfigFamily::Rectangle => {
            let (a, b) = (p[0], p[1]);
            vec![vec![(0.0, 0.0), (a, 0.0), (a, b), (0.0, b)]]
        }
        ConfigFamily::Parallelogram => {
            let (a, b) = (p[0], p[1]);
            vec![vec![(0.0, 0.0), (a, a), (a, a + b), (0.0, b)]]
        }
        ConfigFamily::Triangle => {
            let a = p[0];
            vec![vec![(0.0, 0.0), (0.0, a), (a, a)]]
        }
        ConfigFamily::Hexagon => {
            let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
            vec![vec![
                (0.0, 0.0),
                (a, 0.0),
                (a + b, b),
                (a + b, b + c),
                (d, b + c),
                (0.0, b + c - d),
            ]]
        }
        ConfigFamily::TwoSquares => {
            let (a, s) = (p[0], p[1]);
            vec![
                vec![(0.0, 0.0), (a, 0.0), (a, a), (0.0, a)],
                vec![(s, 0.0), (s + a, 0.0), (s + a, a), (s, a)],
            ]
        }
        ConfigFamily::TwoTrianglesSame => {
            let (a, s) = (p[0], p[1]);
            vec![
                vec![(0.0, 0.0), (a, 0.0), (a, a)],
                vec![(s, 0.0), (a + s, 0.0), (a + s, a)],
            ]
        }
        ConfigFamily::TwoTrianglesOpposite => {
            let a = p[0];
            vec![
                vec![(0.0, 0.0), (a, 0.0), (a, a)],
                vec![(1.0 - a, 0.0), (1.0, 0.0), (1.0 - a, a)],
            ]
        }
        ConfigFamily::SquarePlusTriangle => {
            let (a, s) = (p[0], p[1]);
            vec![
                vec![(0.0, 0.0), (a, 0.0), (a, a), (0.0, a)],
                vec![(s, 0.0), (a + s, 0.0), (a + s, a)],
            ]
        }
    };
    Ok(polys)
}

/// The two black pentagons of the generalized two-pentagon configuration,
/// with exact vertex coordinates.
pub fn pentagon_black_regions(
    p: &[ExactScalar],
) -> Result<[Vec<(ExactScalar, ExactScalar)>; 2], QueensError> {
    check_params(ConfigFamily::JubinTwoPentagons, p.len())?;
    let pf: Vec<f64> = p.iter().map(scalar_to_f64).collect();
    feasible(ConfigFamily::JubinTwoPentagons, &pf)?;
    let (a, b, c, d, e, f, g) = (
        p[0].clone(),
        p[1].clone(),
        p[2].clone(),
        p[3].clone(),
        p[4].clone(),
        p[5].clone(),
        p[6].clone(),
    );
    let one = q(1, 1);
    let half = q(1, 2);
    let two = q(2, 1);
    let mid_x = half.clone() * (g.clone() + d.clone() - b.clone()) + c.clone() - f.clone();
    let mid_y = half * (g.clone() + d.clone() + b.clone()) + c.clone() - f.clone();
    let left = vec![
        (g.clone(), one.clone()),
        (a.clone(), one.clone()),
        (
            a.clone(),
            g.clone() + two.clone() * c.clone() - two * f.clone() + d.clone() - a.clone(),
        ),
        (mid_x, mid_y),
        (g.clone(), g.clone() + b.clone()),
    ];
    let top = a.clone() + b.clone() - e.clone();
    let right = vec![
        (one.clone(), one.clone()),
        (g.clone() + c.clone(), g.clone() + c.clone()),
        (g.clone() + c.clone(), top.clone()),
        (top.clone() + g.clone() - d.clone(), top),
        (one.clone(), one + d.clone() - g.clone()),
    ];
    Ok([left, right])
}

/// True if two convex polygons have a positive-area intersection
/// (separating-axis test; touching along edges or points counts as disjoint).
pub fn convex_overlap(p: &[(f64, f64)], r: &[(f64, f64)]) -> bool {
    let axes = |poly: &[(f64, f64)]| -> Vec<(f64, f64)> {
        (0..poly.len())
            .map(|i| {
                let (x1, y1) = poly[i];
                let (x2, y2) = poly[(i + 1) % poly.len()];
                (y2 - y1, x1 - x2) // outward/inward normal; sign irrelevant
            })
            .collect()
    };
    let project = |poly: &[(f64, f64)], ax: (f64, f64)| -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &(x, y) in poly {
            let v = x * ax.0 + y * ax.1;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    };
    for ax in axes(p).into_iter().chain(axes(r)) {
        if ax.0.abs() + ax.1.abs() < 1e-15 {
            continue;
        }
        let (alo, ahi) = project(p, ax);
        let (blo, bhi) = project(r, ax);
        if ahi <= blo + 1e-12 || bhi <= alo + 1e-12 {
            return false; // separating axis: no positive-area overlap
        }
    }
    true
}

/// Jubin's exact parameters (a,b,c,d,e,f,g).
pub fn jubin_params_exact() -> Vec<ExactScalar> {
    vec![
        q(1, 4),
        q(1, 3),
        q(1, 4),
        q(1, 6),
        q(1, 12),
        q(1, 12),
        q(1, 2),
    ]
}

/// Jubin's parameters as floats.
pub fn jubin_params() -> Vec<f64> {
    jubin_params_exact().iter().map(scalar_to_f64).collect()
}
