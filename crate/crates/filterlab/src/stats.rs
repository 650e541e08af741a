//! Estimator plumbing: deterministic reductions, jackknife and bootstrap
//! standard errors over particle blocks, and least-squares rate fits.

use crate::rng::{RngStream, StreamPurpose};
use rand::Rng;

/// Sums in a fixed pairwise tree order, independent of chunking or threads.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    pairwise_sum(values) / values.len() as f64
}

/// Unbiased sample variance.
pub fn variance(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return f64::NAN;
    }
    let m = mean(values);
    let sq: Vec<f64> = values.iter().map(|x| (x - m) * (x - m)).collect();
    pairwise_sum(&sq) / (n - 1) as f64
}

/// Standard error of the sample mean.
pub fn standard_error(values: &[f64]) -> f64 {
    (variance(values) / values.len() as f64).sqrt()
}

/// Lag-1 autocorrelation of a sequence.
pub fn lag1_autocorrelation(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 3 {
        return f64::NAN;
    }
    let m = mean(values);
    let num: f64 = values.windows(2).map(|w| (w[0] - m) * (w[1] - m)).sum();
    let den: f64 = values.iter().map(|x| (x - m) * (x - m)).sum();
    num / den
}

/// Delete-one-block jackknife for a statistic of block sums.
///
/// `block_stats(leave_out)` must return the statistic recomputed without the
/// given block. Returns `(estimate_from_all, jackknife_se)`.
pub fn jackknife_se<F>(n_blocks: usize, full: f64, block_stats: F) -> f64
where
    F: Fn(usize) -> f64,
{
    if n_blocks < 2 {
        return f64::NAN;
    }
    let replicates: Vec<f64> = (0..n_blocks).map(block_stats).collect();
    let m = mean(&replicates);
    let ss: f64 = replicates.iter().map(|r| (r - m) * (r - m)).sum();
    let _ = full;
    ((n_blocks - 1) as f64 / n_blocks as f64 * ss).sqrt()
}

/// Jackknife SE of a ratio `sum_num / sum_den` aggregated from block sums.
pub fn jackknife_ratio_se(num_blocks: &[f64], den_blocks: &[f64]) -> f64 {
    assert_eq!(num_blocks.len(), den_blocks.len());
    let tot_num = pairwise_sum(num_blocks);
    let tot_den = pairwise_sum(den_blocks);
    jackknife_se(num_blocks.len(), tot_num / tot_den, |b| {
        (tot_num - num_blocks[b]) / (tot_den - den_blocks[b])
    })
}

/// Jackknife SE of a block-sum mean (linear statistic).
pub fn jackknife_mean_se(block_sums: &[f64], per_block: usize) -> f64 {
    let n_blocks = block_sums.len();
    let total = pairwise_sum(block_sums);
    let n = (n_blocks * per_block) as f64;
    jackknife_se(n_blocks, total / n, |b| {
        (total - block_sums[b]) / (n - per_block as f64)
    })
}

/// Bootstrap standard error over blocks: resamples block indices with
/// replacement and recomputes `stat` on each resample. Deterministic given
/// the seed.
pub fn bootstrap_se<F>(n_blocks: usize, resamples: usize, seed: u64, stat: F) -> f64
where
    F: Fn(&[usize]) -> f64,
{
    let mut rng = RngStream::new(seed, StreamPurpose::Bootstrap).rng();
    let mut draws = Vec::with_capacity(resamples);
    let mut idx = vec![0usize; n_blocks];
    for _ in 0..resamples {
        for slot in idx.iter_mut() {
            *slot = rng.random_range(0..n_blocks);
        }
        draws.push(stat(&idx));
    }
    variance(&draws).sqrt()
}

/// Ordinary least squares fit `y = intercept + slope * x`.
#[derive(Debug, Clone, Copy)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Standard error of the slope (undefined for fewer than 3 points).
    pub slope_se: f64,
    pub points: usize,
}

/// Least-squares slope of `y` against `x`; `None` with fewer than two points.
pub fn ols_slope(x: &[f64], y: &[f64]) -> Option<SlopeFit> {
    let n = x.len();
    if n < 2 || y.len() != n {
        return None;
    }
    let mx = mean(x);
    let my = mean(y);
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let slope_se = if n > 2 {
        let rss: f64 = x
            .iter()
            .zip(y)
            .map(|(a, b)| {
                let r = b - intercept - slope * a;
                r * r
            })
            .sum();
        (rss / (n - 2) as f64 / sxx).sqrt()
    } else {
        0.0
    };
    Some(SlopeFit {
        slope,
        intercept,
        slope_se,
        points: n,
    })
}

/// Slope of `log |error|` against `log n`; pairs with non-finite logs are
/// dropped.
pub fn log_log_slope(ns: &[f64], errors: &[f64]) -> Option<SlopeFit> {
    let mut xs = Vec::with_capacity(ns.len());
    let mut ys = Vec::with_capacity(ns.len());
    for (n, e) in ns.iter().zip(errors) {
        let (lx, ly) = (n.ln(), e.abs().ln());
        if lx.is_finite() && ly.is_finite() {
            xs.push(lx);
            ys.push(ly);
        }
    }
    ols_slope(&xs, &ys)
}

/// Splits `n` items into `blocks` nearly equal contiguous ranges.
///
/// The partition depends only on `(n, blocks)`, never on the worker count,
/// which is what keeps parallel reductions bit-reproducible.
pub fn block_ranges(n: usize, blocks: usize) -> Vec<std::ops::Range<usize>> {
    let blocks = blocks.max(1).min(n.max(1));
    let base = n / blocks;
    let extra = n % blocks;
    let mut out = Vec::with_capacity(blocks);
    let mut start = 0;
    for b in 0..blocks {
        let len = base + usize::from(b < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}
