//! Seeded Monte Carlo harness for k-pivot Quicksort with binary-search
//! partition, counting comparisons. Pivots are sorted with 1-pivot
//! Quicksort; lists shorter than k fall back to 1-pivot as well.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub struct MCConfig {
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MCResult {
    pub mean: f64,
    pub variance: f64,
}

/// One-pivot Quicksort on distinct values with a uniformly random pivot,
/// returning (sorted, comparisons).
fn qs1(mut v: Vec<u32>, rng: &mut ChaCha8Rng) -> (Vec<u32>, u64) {
    let n = v.len();
    if n <= 1 {
        return (v, 0);
    }
    let p = v.swap_remove(rng.gen_range(0..n));
    let (lo, hi): (Vec<u32>, Vec<u32>) = v.into_iter().partition(|&x| x < p);
    let mut count = (n - 1) as u64;
    let (mut lo, c1) = qs1(lo, rng);
    let (hi, c2) = qs1(hi, rng);
    count += c1 + c2;
    lo.push(p);
    lo.extend(hi);
    (lo, count)
}

/// Binary search of x among sorted pivots; returns (sublist index, comparisons).
fn binary_place(x: u32, pivots: &[u32]) -> (usize, u64) {
    let (mut lo, mut hi) = (0usize, pivots.len());
    let mut count = 0u64;
    while lo < hi {
        let mid = (lo + hi) / 2;
        count += 1;
        if x < pivots[mid] {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo, count)
}

/// k-pivot Quicksort with binary-search partition, counting comparisons.
fn qsbc(v: Vec<u32>, k: usize, rng: &mut ChaCha8Rng) -> (Vec<u32>, u64) {
    let n = v.len();
    if n <= 1 {
        return (v, 0);
    }
    if n < k || k == 1 {
        return qs1(v, rng);
    }
    // choose k random positions as pivots
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let pivot_pos: std::collections::HashSet<usize> = idx[..k].iter().copied().collect();
    let pivots: Vec<u32> = idx[..k].iter().map(|&i| v[i]).collect();
    let (pivots, mut count) = qs1(pivots, rng);
    let mut subs: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for (i, &x) in v.iter().enumerate() {
        if pivot_pos.contains(&i) {
            continue;
        }
        let (slot, c) = binary_place(x, &pivots);
        count += c;
        subs[slot].push(x);
    }
    let mut out = Vec::with_capacity(n);
    for (slot, sub) in subs.into_iter().enumerate() {
        let (sorted, c) = qsbc(sub, k, rng);
        count += c;
        out.extend(sorted);
        if slot < k {
            out.push(pivots[slot]);
        }
    }
    (out, count)
}

/// Run the Monte Carlo experiment: Fisher-Yates-shuffled permutations from a
/// ChaCha8 stream seeded with cfg.seed; returns mean and sample variance of
/// the comparison count.
pub fn mc_run(cfg: &MCConfig) -> MCResult {
    assert!(cfg.trials >= 1 && cfg.k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut counts = Vec::with_capacity(cfg.trials);
    for _ in 0..cfg.trials {
        let mut v: Vec<u32> = (1..=cfg.n as u32).collect();
        v.shuffle(&mut rng);
        let (sorted, c) = qsbc(v, cfg.k, &mut rng);
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        counts.push(c as f64);
    }
    let mean = counts.iter().sum::<f64>() / cfg.trials as f64;
    let variance = if cfg.trials == 1 {
        0.0
    } else {
        counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (cfg.trials as f64 - 1.0)
    };
    MCResult { mean, variance }
}
