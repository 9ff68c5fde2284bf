//! Bessel functions of the first kind for order 1 and half-integer
//! orders d/2, with zero tables.
//!
//! Small arguments use the ascending series; large arguments the Hankel
//! asymptotic expansion (which terminates for half-integer orders). The
//! crossover at x = 13 balances the two error sources: series
//! cancellation stays below ~1e-11 while the optimally truncated
//! asymptotic remainder has already dropped to the same level.

use crate::error::{Error, Result};
use crate::special::{gamma_int_half, AccuracySpec};

const SERIES_ASYMPTOTIC_CROSSOVER: f64 = 13.0;
const MAX_SERIES_TERMS: usize = 300;

/// Validates the order: 2*nu must be a positive integer (covers nu = 1
/// and every half-integer d/2).
fn order_index(nu: f64) -> Result<u64> {
    let twice = 2.0 * nu;
    if twice < 1.0 || twice.fract() != 0.0 || twice > 64.0 {
        return Err(Error::InvalidArgument(format!(
            "unsupported Bessel order {nu}; need nu in {{1}} or {{d/2, d >= 1}}"
        )));
    }
    Ok(twice as u64)
}

/// Ascending series `sum_m (-1)^m (x/2)^{2m+nu} / (m! Gamma(m+nu+1))`.
fn series(nu: f64, x: f64) -> f64 {
    let two_nu = (2.0 * nu) as u64;
    let half = 0.5 * x;
    let mut term = half.powf(nu) / gamma_int_half(two_nu + 2);
    let mut sum = term;
    let q = half * half;
    for m in 1..MAX_SERIES_TERMS {
        let m = m as f64;
        term *= -q / (m * (m + nu));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Hankel expansion: `sqrt(2/(pi x)) (P cos chi - Q sin chi)` with
/// `chi = x - nu pi/2 - pi/4`. Terms are added while they keep shrinking;
/// for half-integer orders the series is finite and exact.
fn asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let chi = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    let mut p = 1.0;
    let mut q = 0.0;
    // a_k = prod_{i=1..k} (mu - (2i-1)^2) / (k! 8^k); a_0 = 1.
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..40u64 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if a == 0.0 {
            break; // terminating (half-integer) case
        }
        if a.abs() >= prev {
            break; // asymptotic tail started growing
        }
        prev = a.abs();
        if k % 2 == 1 {
            // odd k contributes to Q with sign (-1)^{(k-1)/2}
            let sign = if (k - 1) % 4 == 0 { 1.0 } else { -1.0 };
            q += sign * a;
        } else {
            // even k contributes to P with sign (-1)^{k/2}
            let sign = if k % 4 == 0 { 1.0 } else { -1.0 };
            p += sign * a;
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// J_nu(x) without domain validation; `x >= 0`.
pub(crate) fn bessel_j_unchecked(nu: f64, x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= SERIES_ASYMPTOTIC_CROSSOVER {
        series(nu, x)
    } else {
        asymptotic(nu, x)
    }
}

/// Bessel function of the first kind, orders nu = 1 or d/2, using the
/// default accuracy profile.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    bessel_j_with(nu, x, &AccuracySpec::default())
}

pub fn bessel_j_with(nu: f64, x: f64, acc: &AccuracySpec) -> Result<f64> {
    order_index(nu)?;
    if !(0.0..=acc.domain_max).contains(&x) {
        return Err(Error::DomainExceeded { arg: x, max: acc.domain_max });
    }
    Ok(bessel_j_unchecked(nu, x))
}

/// Ascending table of positive zeros of J_nu.
#[derive(Debug, Clone)]
pub struct BesselZeroTable {
    pub nu: f64,
    pub zeros: Vec<f64>,
}

impl BesselZeroTable {
    /// Locates the first `count` positive zeros by McMahon-guess
    /// bracketing plus bisection on the function itself.
    pub fn build(nu: f64, count: usize) -> Result<Self> {
        order_index(nu)?;
        let mut zeros = Vec::with_capacity(count);
        for m in 1..=count {
            zeros.push(find_zero(nu, m)?);
        }
        Ok(BesselZeroTable { nu, zeros })
    }

    pub fn zero(&self, m: usize) -> Result<f64> {
        if m == 0 || m > self.zeros.len() {
            return Err(Error::TableTooShort { have: self.zeros.len(), want: m });
        }
        Ok(self.zeros[m - 1])
    }

    /// CSV audit dump with columns nu, m, zero.
    pub fn write_csv<W: std::io::Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "nu,m,zero")?;
        for (i, z) in self.zeros.iter().enumerate() {
            writeln!(w, "{},{},{:.12}", self.nu, i + 1, z)?;
        }
        Ok(())
    }
}

/// m-th positive zero of J_nu, bracketed around the McMahon estimate and
/// refined by bisection to ~1e-12 relative width.
pub fn bessel_zero(nu: f64, m: usize) -> Result<f64> {
    order_index(nu)?;
    if m == 0 {
        return Err(Error::InvalidArgument("zero index starts at 1".into()));
    }
    find_zero(nu, m)
}

fn find_zero(nu: f64, m: usize) -> Result<f64> {
    let mu = 4.0 * nu * nu;
    let beta = (m as f64 + 0.5 * nu - 0.25) * std::f64::consts::PI;
    let guess = beta - (mu - 1.0) / (8.0 * beta)
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * beta).powi(3));

    // Expand the bracket around the guess until a sign change shows up.
    let f = |x: f64| bessel_j_unchecked(nu, x);
    let mut half_width = 0.25;
    let (mut lo, mut hi) = loop {
        let lo = (guess - half_width).max(1e-9);
        let hi = guess + half_width;
        if f(lo) * f(hi) < 0.0 {
            break (lo, hi);
        }
        half_width *= 1.6;
        if half_width > 4.0 {
            return Err(Error::BracketingFailure { nu, index: m });
        }
    };

    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-13 * mid.max(1.0) {
            break;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn j1_small_argument_behaviour() {
        assert_eq!(bessel_j(1.0, 0.0).unwrap(), 0.0);
        // J_1(x)/x -> 1/2
        for x in [1e-6, 1e-4, 1e-2] {
            let ratio = bessel_j(1.0, x).unwrap() / x;
            assert!((ratio - 0.5).abs() < 1e-4 * 0.5 + 1e-8, "x={x}");
        }
    }

    #[test]
    fn half_order_reduces_to_sine() {
        for x in [1.0f64, 2.0, 5.0, 30.0, 250.0] {
            let expect = (2.0 / (PI * x)).sqrt() * x.sin();
            let got = bessel_j(0.5, x).unwrap();
            assert!((got - expect).abs() < 1e-12, "x={x}: {got} vs {expect}");
        }
    }

    #[test]
    fn three_halves_closed_form() {
        for x in [0.7f64, 3.0, 12.0, 90.0] {
            let expect = (2.0 / (PI * x)).sqrt() * (x.sin() / x - x.cos());
            let got = bessel_j(1.5, x).unwrap();
            assert!((got - expect).abs() < 1e-11, "x={x}");
        }
    }

    #[test]
    fn series_and_asymptotic_agree_at_crossover() {
        for nu in [0.5, 1.0, 1.5, 2.0, 2.5, 3.0] {
            for x in [12.0, 13.0, 14.0] {
                let s = series(nu, x);
                let a = asymptotic(nu, x);
                assert!((s - a).abs() < 5e-11, "nu={nu} x={x}: {s} vs {a}");
            }
        }
    }

    #[test]
    fn first_two_j1_zeros() {
        let z1 = bessel_zero(1.0, 1).unwrap();
        let z2 = bessel_zero(1.0, 2).unwrap();
        assert!((z1 - 3.83171).abs() < 1e-5);
        assert!((z2 - 7.01559).abs() < 1e-5);
        // the function really changes sign across each zero
        for (z, _) in [(z1, 0), (z2, 1)] {
            let before = bessel_j(1.0, z - 1e-6).unwrap();
            let after = bessel_j(1.0, z + 1e-6).unwrap();
            assert!(before * after < 0.0);
        }
    }

    #[test]
    fn zero_table_is_strictly_increasing_with_pi_spacing() {
        let table = BesselZeroTable::build(1.0, 25).unwrap();
        for w in table.zeros.windows(2) {
            assert!(w[1] > w[0]);
        }
        // spacing approaches pi
        for w in table.zeros[4..].windows(2) {
            assert!(((w[1] - w[0]) - PI).abs() < 0.05);
        }
    }

    #[test]
    fn sign_alternates_between_zeros() {
        let table = BesselZeroTable::build(1.0, 10).unwrap();
        let mut prev_sign = bessel_j(1.0, 1.0).unwrap().signum();
        for w in table.zeros.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let sign = bessel_j(1.0, mid).unwrap().signum();
            assert_eq!(sign, -prev_sign);
            prev_sign = sign;
        }
    }

    #[test]
    fn domain_and_order_validation() {
        assert!(bessel_j(1.0, 1e9).is_err());
        assert!(bessel_j(0.3, 1.0).is_err());
        assert!(bessel_zero(1.0, 0).is_err());
    }
}
