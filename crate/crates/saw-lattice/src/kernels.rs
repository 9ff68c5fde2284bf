//! Analytic Fourier transforms of the pair kernels and the squared-end
//! kernel.
//!
//! Each pair kernel is the indicator of one shell constraint (block k in
//! the shell of radii 1/2 and k-j around block j) times box constraints
//! on the remaining blocks. Its transform factorizes into per-axis
//! interval transforms, one coupling factor along the j/k sum frequency,
//! and one radial shell factor.
//!
//! Two variants coexist. `PaperLiteral` evaluates the printed closed form
//! of the source material verbatim, including its constants (`l^2` box
//! factors, a `j^2` coupling factor that vanishes for j = 0).
//! `DerivedConsistent` carries the constants that actually arise from the
//! interval and ball transforms (`(2l)^d` per box, `(2j)^d` coupling,
//! shells via scaled ball transforms); all verification gates run against
//! this variant, whose value at frequency zero equals the support volume
//! exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{annulus_brace, ball_transform, ft_interval, sinc, sinc_dd, unit_ball_volume};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KernelVariant {
    PaperLiteral,
    DerivedConsistent,
}

impl std::str::FromStr for KernelVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-literal" | "paper" => Ok(KernelVariant::PaperLiteral),
            "derived-consistent" | "derived" => Ok(KernelVariant::DerivedConsistent),
            other => Err(Error::InvalidArgument(format!("unknown kernel variant '{other}'"))),
        }
    }
}

/// Identifies one pair kernel psi_{jk} for a given (n, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelId {
    pub n: usize,
    pub d: usize,
    pub j: usize,
    pub k: usize,
    pub variant: KernelVariant,
}

impl KernelId {
    pub fn new(n: usize, d: usize, j: usize, k: usize, variant: KernelVariant) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDimension(d));
        }
        if !(j < k && k <= n) {
            return Err(Error::PairOutOfRange { j, k, n });
        }
        Ok(KernelId { n, d, j, k, variant })
    }
}

/// A frequency vector in R^{d n}, laid out like the sigma vectors
/// (axis-grouped blocks).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPoint {
    pub d: usize,
    pub n: usize,
    pub xi: Vec<f64>,
}

impl FourierPoint {
    pub fn new(d: usize, n: usize, xi: Vec<f64>) -> Result<Self> {
        if xi.len() != d * n {
            return Err(Error::InvalidArgument(format!(
                "frequency needs {} components, got {}",
                d * n,
                xi.len()
            )));
        }
        if xi.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite frequency component".into()));
        }
        Ok(FourierPoint { d, n, xi })
    }

    pub fn zero(d: usize, n: usize) -> Self {
        FourierPoint { d, n, xi: vec![0.0; d * n] }
    }

    /// Component of block `l` (1-based) along `axis`.
    #[inline]
    pub fn block(&self, l: usize, axis: usize) -> f64 {
        self.xi[axis * self.n + (l - 1)]
    }

    /// Euclidean norm of block `l`.
    #[inline]
    pub fn block_norm(&self, l: usize) -> f64 {
        (0..self.d).map(|a| self.block(l, a).powi(2)).sum::<f64>().sqrt()
    }
}

/// Analytic transform of the pair kernel at a frequency point.
pub fn psi_hat_analytic(id: &KernelId, xi: &FourierPoint) -> f64 {
    assert_eq!(xi.d, id.d, "frequency dimension mismatch");
    assert_eq!(xi.n, id.n, "frequency length mismatch");
    match id.variant {
        KernelVariant::DerivedConsistent => derived(id, xi),
        KernelVariant::PaperLiteral => paper_literal(id, xi),
    }
}

fn derived(id: &KernelId, xi: &FourierPoint) -> f64 {
    let (n, d, j, k) = (id.n, id.d, id.j, id.k);
    let mut value = 1.0;
    for l in 1..=n {
        if l == j || l == k {
            continue;
        }
        for a in 0..d {
            value *= ft_interval(l as f64, xi.block(l, a));
        }
    }
    if j >= 1 {
        // The j-block couples to the k-block through the shell center:
        // its box transform is taken at the per-axis sum frequency.
        for a in 0..d {
            value *= ft_interval(j as f64, xi.block(j, a) + xi.block(k, a));
        }
    }
    value * annulus_brace(d, j, k, xi.block_norm(k))
}

fn paper_literal(id: &KernelId, xi: &FourierPoint) -> f64 {
    let (n, d, j, k) = (id.n, id.d, id.j, id.k);
    if j == 0 {
        // The printed j^2 coupling factor annihilates every j = 0 kernel.
        return 0.0;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut value = 1.0;
    for l in 1..=n {
        if l == j || l == k {
            continue;
        }
        value *= (l * l) as f64;
        for a in 0..d {
            value *= sinc(two_pi * l as f64 * xi.block(l, a));
        }
    }
    // Printed coupling factor, including its vanishing j = 0 case.
    value *= (j * j) as f64;
    for a in 0..d {
        value *= sinc(two_pi * j as f64 * (xi.block(j, a) + xi.block(k, a)));
    }
    // Printed brace: plain coefficients k-j and 1/2 over the d/2 power.
    let r = xi.block_norm(k);
    let big_r = (k - j) as f64;
    let brace = big_r * ball_transform(d, big_r, r) / big_r.powf(d as f64 / 2.0)
        - 0.5 * ball_transform(d, 0.5, r) / 0.5f64.powf(d as f64 / 2.0);
    value * brace
}

/// Exact volume of the support of psi_{jk}: the shell volume times the
/// boxes of every other block (including block j, which the transform's
/// coupling factor integrates over; for j = 0 the center is the fixed
/// origin and carries no box).
pub fn support_volume(id: &KernelId) -> f64 {
    let (n, d, j, k) = (id.n, id.d, id.j, id.k);
    let vd = unit_ball_volume(d);
    let r = (k - j) as f64;
    let shell = vd * (r.powi(d as i32) - 0.5f64.powi(d as i32));
    let mut vol = shell;
    if j >= 1 {
        vol *= (2.0 * j as f64).powi(d as i32);
    }
    for l in 1..=n {
        if l == j || l == k {
            continue;
        }
        vol *= (2.0 * l as f64).powi(d as i32);
    }
    vol
}

/// Analytic transform of the squared-endpoint kernel
/// `psi_n(sigma) = (sigma_n^2 + sigma_{2n}^2) prod_l chi_{[-l,l]^2}`
/// (d = 2 only).
pub fn psi_n_hat(xi: &FourierPoint, n: usize, variant: KernelVariant) -> Result<f64> {
    if xi.d != 2 {
        return Err(Error::InvalidArgument("squared-end kernel implemented for d = 2".into()));
    }
    if xi.n != n || n < 1 {
        return Err(Error::InvalidArgument(format!("frequency length {} != n = {n}", xi.n)));
    }
    let pi = std::f64::consts::PI;
    match variant {
        KernelVariant::DerivedConsistent => {
            let mut boxes = 1.0;
            for l in 1..n {
                boxes *= ft_interval(l as f64, xi.block(l, 0));
                boxes *= ft_interval(l as f64, xi.block(l, 1));
            }
            let nf = n as f64;
            // Transform of u^2 over [-n, n]: -(1/4 pi^2) (2n sinc(2 pi n t))''
            let g0 = |t: f64| ft_interval(nf, t);
            let g2 = |t: f64| -2.0 * nf.powi(3) * sinc_dd(2.0 * pi * nf * t);
            let t0 = xi.block(n, 0);
            let t1 = xi.block(n, 1);
            Ok(boxes * (g2(t0) * g0(t1) + g0(t0) * g2(t1)))
        }
        KernelVariant::PaperLiteral => {
            // Verbatim printed form: one sinc per l at the summed
            // frequency, bare second derivatives of sinc(pi n t).
            let mut value = 1.0;
            for l in 1..n {
                value *= sinc(pi * l as f64 * (xi.block(l, 0) + xi.block(l, 1)));
            }
            let nf = n as f64;
            let dd = |t: f64| (pi * nf).powi(2) * sinc_dd(pi * nf * t);
            Ok(value * (dd(xi.block(n, 0)) + dd(xi.block(n, 1))))
        }
    }
}

/// Closed-form value of the derived-consistent squared-end kernel at
/// frequency zero: the box moment
/// `prod_{l<n} (2l)^2 * integral_{[-n,n]^2} (u^2 + v^2) du dv`.
pub fn psi_n_support_moment(n: usize) -> f64 {
    let mut boxes = 1.0;
    for l in 1..n {
        boxes *= (2.0 * l as f64).powi(2);
    }
    let nf = n as f64;
    boxes * 8.0 * nf.powi(4) / 3.0
}
