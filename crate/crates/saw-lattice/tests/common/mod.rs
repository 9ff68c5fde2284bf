//! Independent oracles for the acceptance suite. Everything here is
//! deliberately separate from the library's own evaluation paths: brute
//! force enumeration, direct quadrature of defining integrals, and a
//! stand-alone Bessel series.

// Shared by several test targets; not every target uses every oracle.
#![allow(dead_code)]

use std::collections::HashSet;
use std::f64::consts::PI;

/// Brute-force SAW counts: enumerate all (2d)^n step sequences and filter
/// with a set-based self-intersection test.
pub fn naive_saw_counts(d: usize, n_max: usize) -> Vec<u64> {
    let dirs: Vec<Vec<i64>> = (0..d)
        .flat_map(|a| {
            [1i64, -1].into_iter().map(move |s| {
                let mut v = vec![0i64; a + 1];
                v[a] = s;
                v
            })
        })
        .map(|mut v| {
            v.resize(d, 0);
            v
        })
        .collect();

    let mut counts = vec![0u64; n_max + 1];
    counts[0] = 1;
    for n in 1..=n_max {
        let mut total = 0u64;
        let mut idx = vec![0usize; n];
        loop {
            // walk the sequence, set-based collision test
            let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(n + 1);
            let mut pos = vec![0i64; d];
            seen.insert(pos.clone());
            let mut ok = true;
            for &i in &idx {
                for (p, step) in pos.iter_mut().zip(&dirs[i]) {
                    *p += step;
                }
                if !seen.insert(pos.clone()) {
                    ok = false;
                    break;
                }
            }
            if ok {
                total += 1;
            }
            // odometer
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                idx[k] += 1;
                if idx[k] < dirs.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        counts[n] = total;
    }
    counts
}

/// Brute-force squared-endpoint sums alongside the counts.
pub fn naive_saw_sq_sums(d: usize, n: usize) -> u64 {
    let dirs: Vec<(usize, i64)> = (0..d).flat_map(|a| [(a, 1i64), (a, -1)]).collect();
    let mut total = 0u64;
    let mut idx = vec![0usize; n];
    if n == 0 {
        return 0;
    }
    loop {
        let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(n + 1);
        let mut pos = vec![0i64; d];
        seen.insert(pos.clone());
        let mut ok = true;
        for &i in &idx {
            let (axis, s) = dirs[i];
            pos[axis] += s;
            if !seen.insert(pos.clone()) {
                ok = false;
                break;
            }
        }
        if ok {
            total += pos.iter().map(|&c| (c * c) as u64).sum::<u64>();
        }
        let mut k = 0;
        loop {
            if k == n {
                break;
            }
            idx[k] += 1;
            if idx[k] < dirs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    total
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_deriv(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Quadrature of the defining interval transform
/// `int_{-l}^{l} e^{-2 pi i x xi} dx` (real part; the imaginary part
/// vanishes by symmetry and is returned for the symmetry check).
pub fn quad_interval_transform(l: f64, xi: f64) -> (f64, f64) {
    let (nodes, weights) = gauss_legendre(200);
    let mut re = 0.0;
    let mut im = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let t = l * x; // map [-1,1] -> [-l,l]
        let phase = -2.0 * PI * t * xi;
        re += w * l * phase.cos();
        im += w * l * phase.sin();
    }
    (re, im)
}

/// Quadrature of the planar shell transform
/// `int_{r_in < |y| <= r_out} e^{-2 pi i y . xi} dy` in polar
/// coordinates (radial Gauss-Legendre, angular trapezoid; the integrand
/// is smooth so both converge fast). `r` is the frequency norm.
pub fn quad_shell_transform_2d(r_in: f64, r_out: f64, r: f64) -> f64 {
    let (nodes, weights) = gauss_legendre(220);
    let m = 1024usize;
    let dtheta = 2.0 * PI / m as f64;
    let mut total = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let rho = 0.5 * (r_in + r_out) + 0.5 * (r_out - r_in) * x;
        let jac = 0.5 * (r_out - r_in) * rho;
        let mut ang = 0.0;
        for k in 0..m {
            let theta = k as f64 * dtheta;
            ang += (2.0 * PI * rho * r * theta.cos()).cos();
        }
        total += w * jac * ang * dtheta;
    }
    total
}

/// Planar ball transform by quadrature.
pub fn quad_ball_transform_2d(r: f64) -> f64 {
    quad_shell_transform_2d(0.0, 1.0, r)
}

/// Ball transform in R^3 by spherical quadrature.
pub fn quad_ball_transform_3d(r: f64) -> f64 {
    let (nodes, weights) = gauss_legendre(220);
    let (tnodes, tweights) = gauss_legendre(220);
    let mut total = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let rho = 0.5 * (x + 1.0);
        let jac = 0.5 * rho * rho;
        let mut inner = 0.0;
        for (t, tw) in tnodes.iter().zip(&tweights) {
            let theta = 0.5 * PI * (t + 1.0);
            inner += tw * 0.5 * PI * theta.sin() * (2.0 * PI * rho * r * theta.cos()).cos();
        }
        total += w * jac * inner;
    }
    2.0 * PI * total
}

/// Stand-alone ascending series for J_1, independent of the library.
pub fn series_j1(x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = half; // (x/2)^1 / (0! 1!)
    let mut sum = term;
    let q = half * half;
    for m in 1..200 {
        let m = m as f64;
        term *= -q / (m * (m + 1.0));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Stand-alone ascending series for J_nu at half-integer or integer
/// order (2*nu integral).
pub fn series_j(nu: f64, x: f64) -> f64 {
    // Gamma(nu + 1) by recurrence from Gamma(1/2) or Gamma(1)
    let twice = (2.0 * nu) as u64;
    let mut gamma = if twice % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut t = if twice % 2 == 0 { 2 } else { 1 };
    while t < twice + 2 {
        gamma *= t as f64 / 2.0;
        t += 2;
    }
    let half = 0.5 * x;
    let mut term = half.powf(nu) / gamma;
    let mut sum = term;
    let q = half * half;
    for m in 1..300 {
        let m = m as f64;
        term *= -q / (m * (m + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Bisection on the stand-alone series: the m-th positive zero of J_1,
/// bracketed by scanning from the previous zero.
pub fn series_j1_zero(m: usize) -> f64 {
    let mut found = 0usize;
    let mut x = 0.5;
    let step = 0.05;
    let mut prev = series_j1(x);
    while found < m {
        let next = series_j1(x + step);
        if prev * next < 0.0 {
            // bisect inside [x, x + step]
            let (mut lo, mut hi) = (x, x + step);
            let mut flo = prev;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = series_j1(mid);
                if flo * fm < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
                if hi - lo < 1e-13 {
                    break;
                }
            }
            found += 1;
            if found == m {
                return 0.5 * (lo + hi);
            }
        }
        x += step;
        prev = next;
    }
    unreachable!("zero scan always terminates via return");
}

/// Deterministic midpoint-grid quadrature of the n = 2, d = 2 domain
/// volume: blocks on [-1,1]^2 x [-2,2]^2 with `m` cells per unit length.
pub fn grid_volume_n2(m: usize, contains: impl Fn(&[Vec<f64>]) -> bool) -> f64 {
    let h = 1.0 / m as f64;
    let cells1 = 2 * m;
    let cells2 = 4 * m;
    let mut count = 0u64;
    for i1 in 0..cells1 {
        let x1 = -1.0 + (i1 as f64 + 0.5) * h;
        for i2 in 0..cells2 {
            let x2 = -2.0 + (i2 as f64 + 0.5) * h;
            for i3 in 0..cells1 {
                let x3 = -1.0 + (i3 as f64 + 0.5) * h;
                for i4 in 0..cells2 {
                    let x4 = -2.0 + (i4 as f64 + 0.5) * h;
                    if contains(&[vec![x1, x3], vec![x2, x4]]) {
                        count += 1;
                    }
                }
            }
        }
    }
    count as f64 * h.powi(4)
}
