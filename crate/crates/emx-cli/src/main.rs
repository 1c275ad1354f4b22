//! `emx`: command-line entry point for the exact-arithmetic experimental
//! mathematics toolkit. Every subcommand emits machine-readable output
//! (JSON by default, CSV on request) with exact rationals serialized as
//! strings alongside float renderings.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use emx_combin::diagmat::{children_closure, gf_family, gf_symbolic, value_sequence, Band, GfMode};
use emx_combin::parking::{
    count_parking, distribution_export, e_area, expectation_sum, factorial_moment,
    forest_to_parking, parking_to_forest,
};
use emx_combin::spanning::{
    gf_spanning_grid, gf_two_forest_grid, grid_graph, joint_resistance, spanning_tree_count,
    ver_gf,
};
use emx_core::ratfun::ratq_to_string;
use emx_core::scalar::{q, scalar_from_str, scalar_to_f64, scalar_to_string, ExactScalar};
use emx_core::{RatQ, RatQ2};
use emx_guess::{c_to_r_offset, find_rec, guess_rec, seq_from_rec};
use emx_queens::{
    areas, areas_exact, exhaustive_small, discrete_black_count, feasible, optimize,
    pentagon_black_regions, rasterize, verify_candidate, white_polygons, ConfigFamily,
};
use emx_quicksort::{
    central_from_raw, factorial_moments, mc_run, pgf, scaled_moments,
    stirling_raw_from_factorial, MCConfig, Variant,
};

const CSV_HELP: &str = "Output format.\n\
json: one pretty-printed object, keys sorted (byte-stable for a fixed request and seed).\n\
csv:  the same payload flattened to rows `path,value` (header included). Nested keys are\n\
joined with '.', array elements indexed numerically, e.g. `gf.num.1,1`. Exact rationals\n\
appear under `...exact` paths, float renderings under `...float` paths. The per-subcommand\n\
schema is therefore the set of JSON paths of its payload, frozen by golden-file tests.";

#[derive(Parser)]
#[command(name = "emx", version, about = "Exact experimental-mathematics toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, long_help = CSV_HELP)]
    format: Format,
    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Guess a C-finite recurrence / rational GF (or a P-recurrence) from a sequence.
    Guess {
        /// Comma-separated sequence of rationals, indexed from n = 1.
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<String>,
        /// Also search for a polynomial-coefficient (holonomic) recurrence.
        #[arg(long)]
        holonomic: bool,
        /// Order-plus-degree cap for the holonomic search.
        #[arg(long, default_value_t = 8)]
        max_c: usize,
    },
    /// Spanning-tree counts, GFs, vertical-edge statistics and grid resistance.
    Spanning {
        /// Grid height k of G_k(n).
        #[arg(long)]
        k: usize,
        /// Largest n for the count/resistance tables.
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Include the generating function F_k(t).
        #[arg(long)]
        gf: bool,
        /// Include the two-component forest generating function S_k(t).
        #[arg(long)]
        two_forest: bool,
        /// Include the bivariate vertical-edge generating function g_k(v,t).
        #[arg(long)]
        vertical: bool,
        /// Include the corner-to-corner joint resistance table.
        #[arg(long)]
        resistance: bool,
    },
    /// Generating functions of almost-diagonal matrix determinants/permanents.
    Diagmat {
        /// First row of the band (comma-separated rationals), corner first.
        #[arg(long, value_delimiter = ',', required = true)]
        row: Vec<String>,
        /// First column of the band; must share the corner entry.
        #[arg(long, value_delimiter = ',', required = true)]
        col: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Det)]
        mode: Mode,
        /// Dimension up to which the direct value sequence is reported.
        #[arg(long, default_value_t = 12)]
        dim: usize,
    },
    /// Parking-function counts, area/sum statistics and the forest bijection.
    Parking {
        #[arg(long)]
        n: u64,
        /// Number of trailing one-way streets (classical parking functions: 1).
        #[arg(long, default_value_t = 1)]
        a: u64,
        /// Report factorial moments of the area statistic up to this order.
        #[arg(long, default_value_t = 2)]
        moments: usize,
        /// Include the full area histogram and its scaled density.
        #[arg(long)]
        histogram: bool,
        /// Map this parking function (comma-separated) through the forest bijection.
        #[arg(long, value_delimiter = ',')]
        bijection: Option<Vec<u64>>,
    },
    /// Exact Quicksort cost distributions: PGFs, moments, Monte Carlo.
    Quicksort {
        /// Variant name, e.g. dual-comparisons, swap-iv, three-pivot-comparisons.
        #[arg(long)]
        variant: String,
        /// List length (table rows run from --n-min to --n).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n_min: Option<usize>,
        /// Include the full probability generating function at n.
        #[arg(long)]
        pgf: bool,
        /// Report central moments up to this order.
        #[arg(long, default_value_t = 2)]
        moments: usize,
        /// Include scaled central moments m_r/m_2^(r/2), r = 3..=moments, at n.
        #[arg(long)]
        scaled: bool,
        /// Run a seeded Monte Carlo experiment (k-pivot comparison counts).
        #[arg(long)]
        mc: bool,
        /// Pivot count for the Monte Carlo experiment.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Peaceable-queens configuration families: areas, optimization, boards.
    Queens {
        /// Family name, e.g. rectangle, jubin-two-pentagons, two-squares.
        #[arg(long)]
        family: String,
        /// Parameter vector (comma-separated floats) to evaluate.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<f64>>,
        /// Numerically maximize min(white, black) over the family.
        #[arg(long)]
        optimize: bool,
        #[arg(long, default_value_t = 40)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check stationarity/balance of the given parameters.
        #[arg(long)]
        verify: bool,
        /// Rasterize onto an n x n board and count white/black cells.
        #[arg(long)]
        board: Option<usize>,
        /// Emit region outlines as polyline data (for plotting).
        #[arg(long)]
        outline: bool,
        /// Exhaustive small-board optimum a(n) (n <= 5); ignores the family.
        #[arg(long)]
        exhaustive: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Det,
    Perm,
}

fn exact_json(x: &ExactScalar) -> Value {
    json!({ "exact": scalar_to_string(x), "float": scalar_to_f64(x) })
}

fn exact_vec(xs: &[ExactScalar]) -> Value {
    Value::Array(xs.iter().map(exact_json).collect())
}

fn ratq_json(f: &RatQ, var: &str) -> Value {
    json!({
        "string": ratq_to_string(f, var),
        "num": f.numer().coeffs().iter().map(scalar_to_string).collect::<Vec<_>>(),
        "den": f.denom().coeffs().iter().map(scalar_to_string).collect::<Vec<_>>(),
    })
}

/// Bivariate GF in t with coefficients that are rational functions in v.
fn ratq2_json(f: &RatQ2) -> Value {
    let side = |p: &emx_core::Poly<RatQ>| -> Vec<String> {
        p.coeffs().iter().map(|c| ratq_to_string(c, "v")).collect()
    };
    json!({ "num_in_t": side(f.numer()), "den_in_t": side(f.denom()) })
}

fn parse_scalars(raw: &[String]) -> Result<Vec<ExactScalar>, String> {
    raw.iter()
        .map(|s| scalar_from_str(s.trim()).map_err(|e| format!("bad rational '{s}': {e:?}")))
        .collect()
}

/// Best rational p/q with q <= max_den if it is within tol of x.
fn snap_rational(x: f64, max_den: i64, tol: f64) -> Option<(i64, i64)> {
    let mut best = (0i64, 1i64);
    let mut best_err = f64::INFINITY;
    for den in 1..=max_den {
        let num = (x * den as f64).round() as i64;
        let err = (x - num as f64 / den as f64).abs();
        if err < best_err {
            best_err = err;
            best = (num, den);
        }
    }
    (best_err <= tol).then_some(best)
}

fn run_guess(seq: Vec<String>, holonomic: bool, max_c: usize) -> Result<Value, String> {
    let data = parse_scalars(&seq)?;
    let mut out = serde_json::Map::new();
    out.insert("sequence".into(), exact_vec(&data));
    match guess_rec(&data) {
        Ok(spec) => {
            let gf = c_to_r_offset(&spec, 1).map_err(|e| format!("{e:?}"))?;
            out.insert(
                "cfinite".into(),
                json!({
                    "initial": spec.initial.iter().map(scalar_to_string).collect::<Vec<_>>(),
                    "rec": spec.coeffs.iter().map(scalar_to_string).collect::<Vec<_>>(),
                    "order": spec.order(),
                    "verified_terms": seq_from_rec(&spec, data.len()) == data,
                }),
            );
            out.insert("gf".into(), ratq_json(&gf, "t"));
        }
        Err(e) => {
            if !holonomic {
                return Err(format!("no C-finite recurrence found: {e:?}"));
            }
            out.insert("cfinite".into(), json!({ "error": format!("{e:?}") }));
        }
    }
    if holonomic {
        let rec = find_rec(&data, 1, max_c).map_err(|e| format!("{e:?}"))?;
        out.insert(
            "holonomic".into(),
            json!({
                "order": rec.order,
                "valid_from": rec.valid_from,
                "coeff_polys": rec
                    .coeff_polys
                    .iter()
                    .map(|p| p.coeffs().iter().map(scalar_to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
        );
    }
    Ok(Value::Object(out))
}

#[allow(clippy::too_many_arguments)]
fn run_spanning(
    k: usize,
    n_max: usize,
    gf: bool,
    two_forest: bool,
    vertical: bool,
    resistance: bool,
) -> Result<Value, String> {
    if k == 0 || n_max == 0 {
        return Err("k and n_max must be positive".into());
    }
    let mut out = serde_json::Map::new();
    out.insert("k".into(), json!(k));
    let counts: Vec<Value> = (1..=n_max)
        .map(|n| {
            json!({
                "n": n,
                "trees": spanning_tree_count(&grid_graph(k, n)).to_string(),
            })
        })
        .collect();
    out.insert("counts".into(), Value::Array(counts));
    if resistance {
        let rows: Vec<Value> = (1..=n_max)
            .filter(|&n| k * n >= 2)
            .map(|n| {
                let r = joint_resistance(k, n);
                json!({ "n": n, "resistance": exact_json(&r) })
            })
            .collect();
        out.insert("resistance".into(), Value::Array(rows));
    }
    if gf {
        let g = gf_spanning_grid(k).map_err(|e| format!("GF guess failed: {e:?}"))?;
        out.insert("gf".into(), ratq_json(&g.gf, "t"));
        out.insert("gf_window".into(), json!([g.window.0, g.window.1]));
    }
    if two_forest {
        let g = gf_two_forest_grid(k).map_err(|e| format!("two-forest GF failed: {e:?}"))?;
        out.insert("two_forest_gf".into(), ratq_json(&g, "t"));
    }
    if vertical {
        let g = ver_gf(k).map_err(|e| format!("vertical-edge GF failed: {e:?}"))?;
        out.insert("vertical_gf".into(), ratq2_json(&g));
    }
    Ok(Value::Object(out))
}

fn run_diagmat(row: Vec<String>, col: Vec<String>, mode: Mode, dim: usize) -> Result<Value, String> {
    let row = parse_scalars(&row)?;
    let col = parse_scalars(&col)?;
    let mode = match mode {
        Mode::Det => GfMode::Det,
        Mode::Perm => GfMode::Perm,
    };
    let band = Band::new(&row, &col).map_err(|e| format!("{e:?}"))?;
    let closure = children_closure(&band).len();
    let window = (2 * dim).max(24);
    let fam = gf_family(&row, &col, mode, 1, window).map_err(|e| format!("{e:?}"))?;
    let sym = gf_symbolic(&row, &col, mode).map_err(|e| format!("{e:?}"))?;
    let series = value_sequence(&row, &col, mode, 1, dim).map_err(|e| format!("{e:?}"))?;
    Ok(json!({
        "mode": if mode == GfMode::Det { "det" } else { "perm" },
        "closure_size": closure,
        "gf_family": ratq_json(&fam, "t"),
        "gf_symbolic": ratq_json(&sym, "t"),
        "methods_agree": fam == sym,
        "series": exact_vec(&series),
    }))
}

fn run_parking(
    n: u64,
    a: u64,
    moments: usize,
    histogram: bool,
    bijection: Option<Vec<u64>>,
) -> Result<Value, String> {
    if n == 0 || a == 0 {
        return Err("n and a must be positive".into());
    }
    let mut out = serde_json::Map::new();
    out.insert("n".into(), json!(n));
    out.insert("a".into(), json!(a));
    out.insert("count".into(), json!(count_parking(n, a).to_string()));
    out.insert("e_sum".into(), exact_json(&expectation_sum(n, a)));
    out.insert("e_area".into(), exact_json(&e_area(n, a)));
    let mut rows = Vec::new();
    for k in 1..=moments {
        let m = factorial_moment(k, n, a).map_err(|e| format!("{e:?}"))?;
        rows.push(json!({ "k": k, "factorial_moment": exact_json(&m) }));
    }
    out.insert("moments".into(), Value::Array(rows));
    if histogram {
        let (raw, scaled) = distribution_export(n, a);
        out.insert(
            "histogram".into(),
            Value::Array(
                raw.iter()
                    .map(|(area, c)| json!({ "area": area, "count": c.to_string() }))
                    .collect(),
            ),
        );
        out.insert(
            "scaled_density".into(),
            Value::Array(scaled.iter().map(|(z, d)| json!({ "z": z, "density": d })).collect()),
        );
    }
    if let Some(p) = bijection {
        let f = parking_to_forest(&p, a).map_err(|e| format!("{e:?}"))?;
        let back = forest_to_parking(&f).map_err(|e| format!("{e:?}"))?;
        out.insert(
            "bijection".into(),
            json!({
                "parking": p,
                "parent": f
                    .parent
                    .iter()
                    .map(|(v, pa)| (v.to_string(), json!(pa)))
                    .collect::<serde_json::Map<_, _>>(),
                "round_trip": back == p,
            }),
        );
    }
    Ok(Value::Object(out))
}

/// Central moments [mean, m_2, .., m_r] from the truncated-PGF engine.
fn qs_central(variant: Variant, n: usize, r: usize) -> Vec<ExactScalar> {
    let f = factorial_moments(variant, n, r.max(2));
    let raws = stirling_raw_from_factorial(&f);
    central_from_raw(&raws, &raws[0])
}

#[allow(clippy::too_many_arguments)]
fn run_quicksort(
    variant: String,
    n: usize,
    n_min: Option<usize>,
    want_pgf: bool,
    moments: usize,
    scaled: bool,
    mc: bool,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<Value, String> {
    let v = Variant::parse(&variant).ok_or(format!("unknown variant '{variant}'"))?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let moments = moments.max(1);
    let lo = n_min.unwrap_or(n);
    if lo > n {
        return Err("--n-min must not exceed --n".into());
    }
    let mut out = serde_json::Map::new();
    out.insert("variant".into(), json!(v.name()));
    out.insert("seed".into(), json!(seed));
    let mut rows = Vec::new();
    for m in lo..=n {
        let c = qs_central(v, m, moments);
        let mut row = serde_json::Map::new();
        row.insert("n".into(), json!(m));
        row.insert("mean".into(), exact_json(&c[0]));
        for (i, cm) in c.iter().enumerate().skip(1) {
            let key = if i == 1 { "var".into() } else { format!("m{}", i + 1) };
            row.insert(key, exact_json(cm));
        }
        rows.push(Value::Object(row));
    }
    out.insert("table".into(), Value::Array(rows));
    if want_pgf {
        let p = pgf(v, n);
        out.insert("pgf".into(), exact_vec(p.poly.coeffs()));
    }
    if scaled {
        let s = scaled_moments(v, n, moments.max(3));
        out.insert("scaled_moments".into(), json!(s));
    }
    if mc {
        let rows: Vec<Value> = (lo..=n)
            .map(|m| {
                let r = mc_run(&MCConfig { n: m, k, trials, seed });
                json!({ "n": m, "mc_mean": r.mean, "mc_variance": r.variance })
            })
            .collect();
        out.insert("mc".into(), Value::Array(rows));
        out.insert("mc_k".into(), json!(k));
        out.insert("mc_trials".into(), json!(trials));
    }
    Ok(Value::Object(out))
}

/// Serialize a parameter vector, snapping to small exact rationals when the
/// snapped point reproduces a balanced configuration exactly.
fn queens_param_json(family: ConfigFamily, params: &[f64]) -> (Value, Option<Value>) {
    let snapped: Option<Vec<(i64, i64)>> = params
        .iter()
        .map(|&x| snap_rational(x, 60, 5e-4))
        .collect();
    if let Some(fracs) = snapped {
        let exact: Vec<ExactScalar> = fracs.iter().map(|&(p, qd)| q(p, qd)).collect();
        if let Ok(pair) = areas_exact(family, &exact) {
            if pair.white == pair.black {
                let numeric = areas(family, params).map(|p| p.white.min(p.black)).unwrap_or(0.0);
                if (scalar_to_f64(&pair.white) - numeric).abs() <= 1e-5 {
                    let mut obj = serde_json::Map::new();
                    for (name, x) in family.param_names().iter().zip(&exact) {
                        obj.insert(name.to_string(), exact_json(x));
                    }
                    return (
                        Value::Object(obj),
                        Some(json!({
                            "white": exact_json(&pair.white),
                            "black": exact_json(&pair.black),
                        })),
                    );
                }
            }
        }
    }
    let mut obj = serde_json::Map::new();
    for (name, &x) in family.param_names().iter().zip(params) {
        obj.insert(name.to_string(), json!({ "float": x }));
    }
    (Value::Object(obj), None)
}

fn poly_rows(polys: &[Vec<(f64, f64)>], color: &str, start: usize) -> Vec<Value> {
    let mut rows = Vec::new();
    for (i, poly) in polys.iter().enumerate() {
        for (j, (x, y)) in poly.iter().enumerate() {
            rows.push(json!({
                "polygon": start + i,
                "color": color,
                "vertex": j,
                "x": x,
                "y": y,
            }));
        }
    }
    rows
}

#[allow(clippy::too_many_arguments)]
fn run_queens(
    family: String,
    params: Option<Vec<f64>>,
    do_optimize: bool,
    starts: usize,
    seed: u64,
    verify: bool,
    board: Option<usize>,
    outline: bool,
    exhaustive: Option<usize>,
) -> Result<Value, String> {
    if let Some(n) = exhaustive {
        let a = exhaustive_small(n).map_err(|e| e.to_string())?;
        return Ok(json!({ "board": n, "exhaustive_optimum": a }));
    }
    let fam = ConfigFamily::parse(&family).map_err(|e| e.to_string())?;
    let mut out = serde_json::Map::new();
    out.insert("family".into(), json!(fam.name()));
    let params: Vec<f64> = if do_optimize {
        let res = optimize(fam, starts, 1e-6, seed).map_err(|e| e.to_string())?;
        out.insert("optimized".into(), json!({ "starts": starts, "seed": seed }));
        out.insert("value".into(), json!(res.value));
        res.params
    } else {
        let p = params.ok_or("provide --params or --optimize")?;
        feasible(fam, &p).map_err(|e| e.to_string())?;
        p
    };
    let pair = areas(fam, &params).map_err(|e| e.to_string())?;
    let (pjson, exact_areas) = queens_param_json(fam, &params);
    out.insert("params".into(), pjson);
    match exact_areas {
        Some(v) => {
            out.insert("areas_exact".into(), v);
            out.insert("white".into(), json!(pair.white));
            out.insert("black".into(), json!(pair.black));
        }
        None => {
            out.insert("white".into(), json!(pair.white));
            out.insert("black".into(), json!(pair.black));
        }
    }
    if verify {
        let rep = verify_candidate(fam, &params).map_err(|e| e.to_string())?;
        out.insert(
            "verify".into(),
            json!({
                "areas_equal": rep.areas_equal,
                "stationary": rep.stationary,
                "max_improvement": rep.max_improvement,
                "value": rep.value,
            }),
        );
    }
    if let Some(nb) = board {
        let b = rasterize(fam, &params, nb).map_err(|e| e.to_string())?;
        let black = discrete_black_count(&b);
        out.insert(
            "board".into(),
            json!({ "n": nb, "white_cells": b.count(), "black_cells": black }),
        );
    }
    if outline {
        let whites = white_polygons(fam, &params).map_err(|e| e.to_string())?;
        let mut rows = poly_rows(&whites, "white", 0);
        if fam == ConfigFamily::JubinTwoPentagons {
            let exact: Vec<ExactScalar> = params
                .iter()
                .map(|&x| q((x * 1e9).round() as i64, 1_000_000_000))
                .collect();
            let blacks = pentagon_black_regions(&exact).map_err(|e| e.to_string())?;
            let blacks: Vec<Vec<(f64, f64)>> = blacks
                .iter()
                .map(|p| p.iter().map(|(x, y)| (scalar_to_f64(x), scalar_to_f64(y))).collect())
                .collect();
            rows.extend(poly_rows(&blacks, "black", whites.len()));
        }
        out.insert("outline".into(), Value::Array(rows));
    }
    Ok(Value::Object(out))
}

/// Flatten a JSON value to `path,value` CSV rows.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, val, rows);
            }
        }
        Value::Array(items) => {
            for (i, val) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), val, rows);
            }
        }
        Value::Null => rows.push((prefix.to_string(), String::new())),
        Value::Bool(b) => rows.push((prefix.to_string(), b.to_string())),
        Value::Number(n) => rows.push((prefix.to_string(), n.to_string())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(v).unwrap()),
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            let mut s = String::from("path,value\n");
            for (p, val) in rows {
                s.push_str(&format!("{},{}\n", csv_quote(&p), csv_quote(&val)));
            }
            s
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Guess { seq, holonomic, max_c } => run_guess(seq, holonomic, max_c),
        Cmd::Spanning { k, n_max, gf, two_forest, vertical, resistance } => {
            run_spanning(k, n_max, gf, two_forest, vertical, resistance)
        }
        Cmd::Diagmat { row, col, mode, dim } => run_diagmat(row, col, mode, dim),
        Cmd::Parking { n, a, moments, histogram, bijection } => {
            run_parking(n, a, moments, histogram, bijection)
        }
        Cmd::Quicksort {
            variant, n, n_min, pgf, moments, scaled, mc, k, trials, seed,
        } => run_quicksort(variant, n, n_min, pgf, moments, scaled, mc, k, trials, seed),
        Cmd::Queens {
            family, params, optimize, starts, seed, verify, board, outline, exhaustive,
        } => run_queens(family, params, optimize, starts, seed, verify, board, outline, exhaustive),
    };
    let (payload, code) = match result {
        Ok(v) => (v, 0),
        Err(msg) => (json!({ "error": { "message": msg } }), 2),
    };
    let text = render(&payload, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                std::process::exit(3);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    std::process::exit(code);
}
