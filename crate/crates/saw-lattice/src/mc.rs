//! Seeded, stream-deterministic Monte Carlo.
//!
//! Work is split across independent ChaCha substreams (one per stream
//! index) and partial sums are folded in fixed stream order, so a given
//! (seed, stream_count) pair produces bit-identical estimates no matter
//! how many worker threads execute the streams.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use serde::Serialize;

/// Sampling configuration. Estimates are reproducible functions of
/// (samples, seed, stream_count).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub stream_count: u32,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        McConfig { samples: samples.max(1), seed, stream_count: 64 }
    }

    pub fn streams(mut self, count: u32) -> Self {
        self.stream_count = count.max(1);
        self
    }
}

/// A Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EstimateWithError {
    pub value: f64,
    pub std_error: f64,
    pub samples_used: u64,
}

impl EstimateWithError {
    pub fn scaled(self, factor: f64) -> Self {
        EstimateWithError {
            value: self.value * factor,
            std_error: self.std_error * factor.abs(),
            samples_used: self.samples_used,
        }
    }

    /// |self - other| in units of the combined standard error.
    pub fn sigma_distance(&self, other: &EstimateWithError) -> f64 {
        let combined = (self.std_error.powi(2) + other.std_error.powi(2)).sqrt();
        if combined == 0.0 {
            if self.value == other.value {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.value - other.value).abs() / combined
        }
    }
}

/// Per-stream accumulator: plain fixed-order sums, merged in stream order.
#[derive(Clone, Copy)]
struct Partial<const K: usize> {
    sum: [f64; K],
    sum_sq: [f64; K],
    n: u64,
}

/// Mean (and standard error of the mean) of a K-component sample
/// function, evaluated `cfg.samples` times across seeded substreams.
pub fn mc_mean_vec<const K: usize, F>(cfg: &McConfig, f: F) -> ([EstimateWithError; K], u64)
where
    F: Fn(&mut ChaCha8Rng) -> [f64; K] + Sync,
{
    let streams = cfg.stream_count as u64;
    let base = cfg.samples / streams;
    let extra = cfg.samples % streams;

    let partials: Vec<Partial<K>> = (0..streams)
        .into_par_iter()
        .map(|s| {
            let n = base + u64::from(s < extra);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(s);
            let mut sum = [0.0; K];
            let mut sum_sq = [0.0; K];
            for _ in 0..n {
                let v = f(&mut rng);
                for i in 0..K {
                    sum[i] += v[i];
                    sum_sq[i] += v[i] * v[i];
                }
            }
            Partial { sum, sum_sq, n }
        })
        .collect();

    let mut sum = [0.0; K];
    let mut sum_sq = [0.0; K];
    let mut n = 0u64;
    for p in partials {
        for i in 0..K {
            sum[i] += p.sum[i];
            sum_sq[i] += p.sum_sq[i];
        }
        n += p.n;
    }

    let nf = n as f64;
    let mut out = [EstimateWithError { value: 0.0, std_error: 0.0, samples_used: n }; K];
    for i in 0..K {
        let mean = sum[i] / nf;
        let var = ((sum_sq[i] / nf - mean * mean) / (nf - 1.0).max(1.0)).max(0.0);
        out[i] = EstimateWithError {
            value: mean,
            std_error: var.sqrt(),
            samples_used: n,
        };
    }
    (out, n)
}

/// Scalar convenience wrapper around [`mc_mean_vec`].
pub fn mc_mean<F>(cfg: &McConfig, f: F) -> EstimateWithError
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let (out, _) = mc_mean_vec::<1, _>(cfg, |rng| [f(rng)]);
    out[0]
}

/// Runtime-width analog of [`mc_mean_vec`]: the sample function fills a
/// `width`-component buffer per draw. Same determinism contract.
pub fn mc_mean_dyn<F>(cfg: &McConfig, width: usize, f: F) -> Vec<EstimateWithError>
where
    F: Fn(&mut ChaCha8Rng, &mut [f64]) + Sync,
{
    let streams = cfg.stream_count as u64;
    let base = cfg.samples / streams;
    let extra = cfg.samples % streams;

    let partials: Vec<(Vec<f64>, Vec<f64>, u64)> = (0..streams)
        .into_par_iter()
        .map(|s| {
            let n = base + u64::from(s < extra);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(s);
            let mut sum = vec![0.0; width];
            let mut sum_sq = vec![0.0; width];
            let mut buf = vec![0.0; width];
            for _ in 0..n {
                f(&mut rng, &mut buf);
                for i in 0..width {
                    sum[i] += buf[i];
                    sum_sq[i] += buf[i] * buf[i];
                }
            }
            (sum, sum_sq, n)
        })
        .collect();

    let mut sum = vec![0.0; width];
    let mut sum_sq = vec![0.0; width];
    let mut n = 0u64;
    for (s, sq, m) in partials {
        for i in 0..width {
            sum[i] += s[i];
            sum_sq[i] += sq[i];
        }
        n += m;
    }
    let nf = n as f64;
    (0..width)
        .map(|i| {
            let mean = sum[i] / nf;
            let var = ((sum_sq[i] / nf - mean * mean) / (nf - 1.0).max(1.0)).max(0.0);
            EstimateWithError {
                value: mean,
                std_error: var.sqrt(),
                samples_used: n,
            }
        })
        .collect()
}

/// One standard normal via Box-Muller, consuming two uniforms.
#[inline]
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Fills `out` with a uniform draw from the product of intervals.
#[inline]
pub fn sample_box(rng: &mut ChaCha8Rng, bounds: &[(f64, f64)], out: &mut [f64]) {
    for (x, &(lo, hi)) in out.iter_mut().zip(bounds) {
        *x = lo + (hi - lo) * rng.gen::<f64>();
    }
}

/// Volume of a product of intervals.
pub fn box_volume(bounds: &[(f64, f64)]) -> f64 {
    bounds.iter().map(|&(lo, hi)| hi - lo).product()
}
