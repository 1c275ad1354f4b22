//! Exact analysis of Quicksort variants: probability generating functions
//! for comparison/swap counts, factorial and central moments, closed-form
//! fitting, truncated-series moment extraction, and a seeded Monte Carlo
//! harness.

pub mod mc;
pub mod moments;
pub mod pgf;

pub use mc::{mc_run, MCConfig, MCResult};
pub use moments::{
    central_from_raw, factorial_moments, fit_moment, mean_and_variance, mean_sequence,
    moments_from_pgf, scaled_moments, stirling_raw_from_factorial,
};
pub use pgf::{ip_prob, per_prob, pgf, pgf_table, pivot_dist_v5, truncated_moments, Pgf, Variant};
