//! Self-contained special functions: unnormalized sinc, Bessel J of order
//! 1 and d/2, their zeros and product truncations, and the closed-form
//! Fourier transforms of interval / ball / shell indicators under the
//! `e^{-2 pi i x xi}` convention.

mod bessel;

pub use bessel::{bessel_j, bessel_j_with, bessel_zero, BesselZeroTable};

use crate::error::{Error, Result};

/// Crossover below which removable singularities switch to explicit
/// series branches.
pub const SMALL_ARG: f64 = 1e-4;

/// Accuracy contract for the special-function evaluations.
#[derive(Debug, Clone, Copy)]
pub struct AccuracySpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Largest argument the evaluation routines accept.
    pub domain_max: f64,
}

impl Default for AccuracySpec {
    fn default() -> Self {
        // Series/asymptotic split keeps relative error near 1e-11 over
        // [0, 100]; the domain extends far enough to host the zero table
        // used by the product formulas (j_{1,10^4} ~ 3.1e4).
        AccuracySpec {
            rel_tol: 1e-11,
            abs_tol: 1e-12,
            domain_max: 40_000.0,
        }
    }
}

/// Unnormalized sinc: `sin(u)/u`, with `sinc(0) = 1`.
pub fn sinc(u: f64) -> f64 {
    let a = u.abs();
    if a < SMALL_ARG {
        let u2 = u * u;
        1.0 - u2 / 6.0 + u2 * u2 / 120.0
    } else {
        u.sin() / u
    }
}

/// Second derivative of sinc, needed by the squared-coordinate kernels.
pub fn sinc_dd(u: f64) -> f64 {
    let a = u.abs();
    if a < 1e-2 {
        // -1/3 + u^2/10 - u^4/168 + u^6/6480
        let u2 = u * u;
        -1.0 / 3.0 + u2 / 10.0 - u2 * u2 / 168.0 + u2 * u2 * u2 / 6480.0
    } else {
        let (s, c) = u.sin_cos();
        -s / u - 2.0 * c / (u * u) + 2.0 * s / (u * u * u)
    }
}

/// Transform of the indicator of `[-l, l]`: `2l sinc(2 pi l xi)`.
pub fn ft_interval(l: f64, xi: f64) -> f64 {
    debug_assert!(l > 0.0);
    2.0 * l * sinc(2.0 * std::f64::consts::PI * l * xi)
}

/// Volume of the unit ball in R^d.
pub fn unit_ball_volume(d: usize) -> f64 {
    std::f64::consts::PI.powf(d as f64 / 2.0) / gamma_int_half(d as u64 + 2)
}

/// Gamma at integer or half-integer arguments: `gamma_int_half(t)` is
/// `Gamma(t/2)`, exact up to rounding via the recurrence from
/// `Gamma(1/2) = sqrt(pi)` and `Gamma(1) = 1`.
pub fn gamma_int_half(twice_arg: u64) -> f64 {
    debug_assert!(twice_arg >= 1);
    let even = twice_arg.is_multiple_of(2);
    let mut value = if even { 1.0 } else { std::f64::consts::PI.sqrt() };
    let mut t = if even { 2 } else { 1 };
    while t < twice_arg {
        value *= t as f64 / 2.0;
        t += 2;
    }
    value
}

/// Transform of the unit-ball indicator in R^d at radial frequency r:
/// `J_{d/2}(2 pi r) / r^{d/2}`, equal to the unit-ball volume at r = 0.
pub fn ft_ball_radial(d: usize, r: f64) -> f64 {
    let nu2 = d as u64; // 2*nu with nu = d/2
    if r.abs() < SMALL_ARG {
        // sum_m (-1)^m pi^{2m + nu} r^{2m} / (m! Gamma(m + nu + 1))
        let pi = std::f64::consts::PI;
        let mut term = pi.powf(d as f64 / 2.0) / gamma_int_half(nu2 + 2);
        let mut sum = term;
        let r2 = r * r;
        for m in 1..6u64 {
            term *= -(pi * pi) * r2 / (m as f64 * (m as f64 + d as f64 / 2.0));
            sum += term;
        }
        sum
    } else {
        let x = 2.0 * std::f64::consts::PI * r;
        bessel::bessel_j_unchecked(d as f64 / 2.0, x) / r.powf(d as f64 / 2.0)
    }
}

/// Transform of the indicator of `B(0, R)` in R^d at radial frequency r.
pub fn ball_transform(d: usize, radius: f64, r: f64) -> f64 {
    radius.powi(d as i32) * ft_ball_radial(d, radius * r)
}

/// Transform of the unit-ball indicator at a frequency vector.
pub fn ft_ball(d: usize, xi: &[f64]) -> f64 {
    debug_assert_eq!(xi.len(), d);
    let r = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
    ft_ball_radial(d, r)
}

/// Transform of the shell `B(0, r_out) \ B(0, r_in)` at radial frequency r.
pub fn shell_transform(d: usize, r_in: f64, r_out: f64, r: f64) -> f64 {
    ball_transform(d, r_out, r) - ball_transform(d, r_in, r)
}

/// The brace factor of the pair kernels: transform of the shell between
/// radii 1/2 and k-j. For d = 2 this is
/// `[(k-j) J_1(2 pi (k-j) r) - (1/2) J_1(pi r)] / r`, with limit
/// `pi ((k-j)^2 - 1/4)` at r = 0.
pub fn annulus_brace(d: usize, j: usize, k: usize, r: f64) -> f64 {
    debug_assert!(k > j);
    shell_transform(d, 0.5, (k - j) as f64, r)
}

/// Truncated sinc product: `prod_{m<=M} (1 - 4 x^2 / m^2)`, converging to
/// `sinc(2 pi x)` as M grows.
pub fn sinc_product(x: f64, terms: usize) -> f64 {
    let mut p = 1.0;
    let x2 = 4.0 * x * x;
    for m in 1..=terms {
        let m = m as f64;
        p *= 1.0 - x2 / (m * m);
    }
    p
}

/// Truncated Bessel product: `prod_{m<=M} (1 - x^2 / j_m^2)`, converging
/// to `2 J_1(x) / x` for the order-1 zero table.
pub fn bessel_product(x: f64, terms: usize, table: &BesselZeroTable) -> Result<f64> {
    if table.zeros.len() < terms {
        return Err(Error::TableTooShort {
            have: table.zeros.len(),
            want: terms,
        });
    }
    let x2 = x * x;
    let mut p = 1.0;
    for z in &table.zeros[..terms] {
        p *= 1.0 - x2 / (z * z);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sinc_basics() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(PI).abs() < 1e-15);
        assert!((sinc(PI / 2.0) - 2.0 / PI).abs() < 1e-15);
        // evenness
        for u in [1e-6, 0.3, 2.7, 41.0] {
            assert_eq!(sinc(u), sinc(-u));
        }
        // branch agreement straddling the crossover
        let eps = SMALL_ARG;
        assert!((sinc(eps * (1.0 - 1e-9)) - sinc(eps * (1.0 + 1e-9))).abs() < 1e-12);
    }

    #[test]
    fn sinc_dd_matches_finite_differences() {
        let h = 1e-5;
        for u in [0.0, 0.004, 0.5, 3.0, 10.0] {
            let fd = (sinc(u + h) - 2.0 * sinc(u) + sinc(u - h)) / (h * h);
            assert!((sinc_dd(u) - fd).abs() < 1e-5, "u={u}");
        }
        assert!((sinc_dd(0.0) + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn interval_transform_zero_frequency_is_length() {
        assert_eq!(ft_interval(3.5, 0.0), 7.0);
        assert!(ft_interval(1.0, 0.5).abs() < 1e-15);
    }

    #[test]
    fn unit_ball_volumes() {
        assert!((unit_ball_volume(1) - 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-14);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((unit_ball_volume(4) - PI * PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn gamma_int_half_values() {
        assert!((gamma_int_half(1) - PI.sqrt()).abs() < 1e-15);
        assert!((gamma_int_half(2) - 1.0).abs() < 1e-15);
        assert!((gamma_int_half(3) - PI.sqrt() / 2.0).abs() < 1e-15);
        assert!((gamma_int_half(8) - 6.0).abs() < 1e-12); // Gamma(4) = 3!
        assert!((gamma_int_half(7) - 15.0 * PI.sqrt() / 8.0).abs() < 1e-12);
    }

    #[test]
    fn ball_transform_zero_frequency_is_measure() {
        assert!((ft_ball(2, &[0.0, 0.0]) - PI).abs() < 1e-12);
        assert!((ft_ball(3, &[0.0, 0.0, 0.0]) - 4.0 * PI / 3.0).abs() < 1e-12);
        assert!((ball_transform(2, 2.0, 0.0) - 4.0 * PI).abs() < 1e-11);
    }

    #[test]
    fn ball_transform_depends_only_on_norm() {
        let a = ft_ball(2, &[0.3, 0.4]);
        let b = ft_ball(2, &[0.5, 0.0]);
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn small_r_branch_is_continuous() {
        for d in 1..=4usize {
            let lo = ft_ball_radial(d, SMALL_ARG * 0.999);
            let hi = ft_ball_radial(d, SMALL_ARG * 1.001);
            assert!((lo - hi).abs() < 1e-9, "d={d}: {lo} vs {hi}");
        }
    }

    #[test]
    fn annulus_brace_limits() {
        assert!((annulus_brace(2, 0, 1, 1e-9) - PI * (1.0 - 0.25)).abs() < 1e-9);
        assert!((annulus_brace(2, 0, 2, 1e-9) - PI * (4.0 - 0.25)).abs() < 1e-9);
        assert!((annulus_brace(3, 1, 2, 0.0) - 4.0 * PI / 3.0 * (1.0 - 0.125)).abs() < 1e-12);
    }

    #[test]
    fn sinc_product_converges() {
        assert_eq!(sinc_product(0.0, 50), 1.0);
        let x = 0.25;
        let exact = sinc(2.0 * PI * x);
        let coarse = (sinc_product(x, 100) - exact).abs();
        let fine = (sinc_product(x, 10_000) - exact).abs();
        assert!(fine < 1e-3, "fine err {fine}");
        assert!(fine < coarse);
    }
}
