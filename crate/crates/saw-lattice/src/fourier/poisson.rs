//! Poisson-summation recount of c_2.
//!
//! The product of all pair kernels is the indicator of the full
//! constraint domain in R^4; its lattice sum is c_2 = 12. Smoothing with
//! a Gaussian mollifier makes Poisson summation applicable:
//! `sum_m (F * eta_eps)(m) = sum_v F_hat(v) eta_hat_eps(v)`.
//!
//! The recount truncates the right-hand side at `|v|_inf <= V`. Because
//! the mollifier transform factorizes over coordinates, the truncated sum
//! equals the integral of `F(sigma) K(sigma)` where K is a product of
//! four one-dimensional Gaussian-windowed cosine kernels — a single
//! 4-dimensional quadrature shared by every frequency, algebraically
//! identical to summing the per-frequency transforms. Estimates of single
//! `F_hat(v) eta_hat(v)` terms and of the mollified lattice sum itself
//! are provided for cross-checks.

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::fourier::{block_bounds, DomainConvention};
use crate::mc::{box_volume, mc_mean_dyn, mc_mean_vec, sample_box, standard_normal, EstimateWithError, McConfig};

/// Gaussian mollifier of width eps; its transform is
/// `exp(-2 pi^2 eps^2 |v|^2)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MollifierConfig {
    pub eps: f64,
}

impl MollifierConfig {
    pub fn new(eps: f64) -> Result<Self> {
        if eps <= 0.0 || !eps.is_finite() {
            return Err(Error::InvalidArgument("mollifier width must be positive".into()));
        }
        Ok(MollifierConfig { eps })
    }

    /// Transform value at squared frequency norm `v_sq`.
    pub fn hat(&self, v_sq: f64) -> f64 {
        (-2.0 * std::f64::consts::PI.powi(2) * self.eps * self.eps * v_sq).exp()
    }
}

/// Largest supported frequency cube radius.
pub const MAX_V: usize = 24;

const COORDS_MAX: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct PoissonRecount {
    pub n: usize,
    pub d: usize,
    pub eps: f64,
    pub v_max: usize,
    pub convention: DomainConvention,
    /// Truncated Poisson sum at `|v|_inf <= v_max`.
    pub estimate: EstimateWithError,
    /// Truncated sums for every cube radius 0..=v_max (index = radius).
    pub partial_sums: Vec<EstimateWithError>,
    /// The v = 0 term alone: the domain volume.
    pub v0_term: EstimateWithError,
}

/// Truncated Poisson recount of the n = 2 count.
///
/// With the `IntegerInterior` convention every counted lattice point is
/// interior, so for small eps the mollified lattice sum — and with it the
/// truncated Poisson sum once `v_max` covers the mollifier bandwidth —
/// approaches c_2 = 12 itself. With `Standard` thresholds the adjacent
/// steps sit on the domain boundary and the small-eps limit counts them
/// fractionally; that convention is still the right one for comparing
/// the v = 0 term against [`crate::fourier::volume_term`].
pub fn poisson_recount(
    n: usize,
    d: usize,
    v_max: usize,
    moll: &MollifierConfig,
    cfg: &McConfig,
    convention: DomainConvention,
) -> Result<PoissonRecount> {
    if n != 2 || d != 2 {
        return Err(Error::BudgetExceeded(
            "the Poisson recount is desk-tractable only for n = 2, d = 2".into(),
        ));
    }
    if v_max > MAX_V {
        return Err(Error::BudgetExceeded(format!("v_max > {MAX_V} not supported")));
    }
    let spec = convention.spec(d, n);
    let bounds = block_bounds(&spec);
    let vol = box_volume(&bounds);
    let coords = d * n;
    debug_assert!(coords <= COORDS_MAX);

    // eta_hat weights per axis frequency magnitude.
    let weights: Vec<f64> = (1..=v_max).map(|t| moll.hat((t * t) as f64)).collect();
    let two_pi = 2.0 * std::f64::consts::PI;

    let width = v_max + 2; // K_0..K_vmax plus the bare indicator
    let spec_ref = &spec;
    let bounds_ref = &bounds;
    let weights_ref = &weights;
    let ests = mc_mean_dyn(cfg, width, move |rng: &mut ChaCha8Rng, buf: &mut [f64]| {
        let mut sigma = [0.0; COORDS_MAX];
        sample_box(rng, bounds_ref, &mut sigma[..coords]);
        let blocks: Vec<Vec<f64>> = (0..n)
            .map(|i| sigma[i * d..(i + 1) * d].to_vec())
            .collect();
        if !spec_ref.contains_f64(&blocks) {
            buf.fill(0.0);
            return;
        }
        // Per-coordinate truncated theta kernels:
        // p_i(V) = 1 + 2 sum_{t<=V} w_t cos(2 pi t sigma_i),
        // cosines by rotation recurrence.
        let mut prefix = [[0.0f64; MAX_V + 1]; COORDS_MAX];
        for i in 0..coords {
            let theta = two_pi * sigma[i];
            let (rot_s, rot_c) = theta.sin_cos();
            let mut c = 1.0; // cos(0)
            let mut s = 0.0;
            let mut acc = 1.0;
            prefix[i][0] = acc;
            for (t, &w) in weights_ref.iter().enumerate() {
                let c_next = c * rot_c - s * rot_s;
                let s_next = s * rot_c + c * rot_s;
                c = c_next;
                s = s_next;
                acc += 2.0 * w * c;
                prefix[i][t + 1] = acc;
            }
        }
        for v in 0..=v_max {
            let mut k = 1.0;
            for p in prefix.iter().take(coords) {
                k *= p[v];
            }
            buf[v] = k;
        }
        buf[v_max + 1] = 1.0;
    });

    let partial_sums: Vec<EstimateWithError> =
        ests[..=v_max].iter().map(|e| e.scaled(vol)).collect();
    let v0_term = ests[v_max + 1].scaled(vol);
    let estimate = partial_sums[v_max];

    Ok(PoissonRecount {
        n,
        d,
        eps: moll.eps,
        v_max,
        convention,
        estimate,
        partial_sums,
        v0_term,
    })
}

/// Direct quadrature of a single Poisson term
/// `F_hat(v) eta_hat(v)` at an integer frequency; returns (real,
/// imaginary) estimates. This is the per-frequency route the truncated
/// sum is assembled from.
pub fn psi_product_term(
    n: usize,
    d: usize,
    v: &[i64],
    moll: &MollifierConfig,
    cfg: &McConfig,
    convention: DomainConvention,
) -> Result<(EstimateWithError, EstimateWithError)> {
    if d * n > COORDS_MAX {
        return Err(Error::BudgetExceeded(format!(
            "direct quadrature limited to d*n <= {COORDS_MAX}"
        )));
    }
    if v.len() != d * n {
        return Err(Error::InvalidArgument(format!(
            "frequency needs {} components, got {}",
            d * n,
            v.len()
        )));
    }
    let spec = convention.spec(d, n);
    let bounds = block_bounds(&spec);
    let vol = box_volume(&bounds);
    let coords = d * n;
    let v_sq: f64 = v.iter().map(|&t| (t * t) as f64).sum();
    let damp = moll.hat(v_sq);
    let two_pi = 2.0 * std::f64::consts::PI;

    let spec_ref = &spec;
    let bounds_ref = &bounds;
    let (est, _) = mc_mean_vec::<2, _>(cfg, move |rng| {
        let mut sigma = [0.0; COORDS_MAX];
        sample_box(rng, bounds_ref, &mut sigma[..coords]);
        let blocks: Vec<Vec<f64>> = (0..n)
            .map(|i| sigma[i * d..(i + 1) * d].to_vec())
            .collect();
        if !spec_ref.contains_f64(&blocks) {
            return [0.0, 0.0];
        }
        let phase: f64 = -two_pi
            * sigma[..coords]
                .iter()
                .zip(v)
                .map(|(s, &t)| s * t as f64)
                .sum::<f64>();
        [phase.cos(), phase.sin()]
    });
    Ok((est[0].scaled(vol * damp), est[1].scaled(vol * damp)))
}

/// The mollified lattice sum `sum_m (F * eta_eps)(m)`, evaluated point by
/// point on the integer lattice: each candidate point contributes the
/// Gaussian-local average of the domain indicator. This is the quantity
/// the truncated Poisson sums converge to as `v_max` grows.
pub fn smoothed_lattice_sum(
    n: usize,
    d: usize,
    moll: &MollifierConfig,
    cfg: &McConfig,
    convention: DomainConvention,
) -> Result<EstimateWithError> {
    if n != 2 || d != 2 {
        return Err(Error::BudgetExceeded(
            "the smoothed lattice sum is desk-tractable only for n = 2, d = 2".into(),
        ));
    }
    let spec = convention.spec(d, n);
    let eps = moll.eps;

    // Candidate integer points: block boxes padded by the mollifier reach.
    let pad = (4.0 * eps).ceil() as i64 + 1;
    let half1 = spec.outer_radius(0, 1).ceil() as i64 + pad;
    let half2 = spec.outer_radius(0, 2).ceil() as i64 + pad;

    let mut candidates: Vec<[i64; 4]> = Vec::new();
    for a in -half1..=half1 {
        for b in -half2..=half2 {
            for c in -half1..=half1 {
                for e in -half2..=half2 {
                    let m = [a, b, c, e]; // sigma layout: axis0 blocks 1,2; axis1 blocks 1,2
                    if gaussian_mass_plausible(&spec, &m, eps) {
                        candidates.push(m);
                    }
                }
            }
        }
    }

    let per_point = (cfg.samples / candidates.len().max(1) as u64).max(512);
    let mut value = 0.0;
    let mut var = 0.0;
    let mut used = 0;
    for (idx, m) in candidates.iter().enumerate() {
        let point_cfg = McConfig {
            samples: per_point,
            seed: cfg.seed.wrapping_add((idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            stream_count: cfg.stream_count,
        };
        let spec_ref = &spec;
        let (est, ns) = mc_mean_vec::<1, _>(&point_cfg, move |rng| {
            let mut blocks = vec![vec![0.0; 2]; 2];
            // layout: m = [s1, s2, s3, s4] with blocks (s1,s3), (s2,s4)
            blocks[0][0] = m[0] as f64 + eps * standard_normal(rng);
            blocks[1][0] = m[1] as f64 + eps * standard_normal(rng);
            blocks[0][1] = m[2] as f64 + eps * standard_normal(rng);
            blocks[1][1] = m[3] as f64 + eps * standard_normal(rng);
            [f64::from(spec_ref.contains_f64(&blocks))]
        });
        value += est[0].value;
        var += est[0].std_error * est[0].std_error;
        used += ns;
    }
    Ok(EstimateWithError {
        value,
        std_error: var.sqrt(),
        samples_used: used,
    })
}

/// Cheap reject for lattice points whose Gaussian neighbourhood cannot
/// reach the domain: some shell constraint is violated by more than the
/// mollifier can plausibly bridge.
fn gaussian_mass_plausible(spec: &DomainSpec, m: &[i64; 4], eps: f64) -> bool {
    let reach = 8.0 * eps;
    for c in &spec.constraints {
        let (bj, bk) = (block_of(m, c.j), block_of(m, c.k));
        let dist = (((bk[0] - bj[0]).pow(2) + (bk[1] - bj[1]).pow(2)) as f64).sqrt();
        let r_out = c.outer_sq().sqrt();
        let r_in = c.inner_sq().sqrt();
        // Moving both endpoints by `reach` changes the distance by at
        // most 2*reach.
        let gap = if dist > r_out {
            dist - r_out
        } else if dist < r_in {
            r_in - dist
        } else {
            0.0
        };
        if gap > 2.0 * reach {
            return false;
        }
    }
    true
}

fn block_of(m: &[i64; 4], idx: usize) -> [i64; 2] {
    match idx {
        0 => [0, 0],
        1 => [m[0], m[2]],
        _ => [m[1], m[3]],
    }
}
