//! Connective-constant and displacement-exponent probes on the exact
//! small-n data: roots, ratios, growth-law fits, the square-root
//! envelope and the displacement slope.
//!
//! Run with: cargo run --release --example asymptotic_fits

use saw_lattice::asymptotics::{
    check_submultiplicative, connective_estimates, envelope_constant, fit_displacement_exponent,
    fit_growth_law,
};
use saw_lattice::enumerate::enumerate_saws;

fn main() -> saw_lattice::Result<()> {
    let n_max = 12;
    let result = enumerate_saws(2, n_max, false)?;
    let counts = &result.counts;

    println!("{:>3} {:>10} {:>8} {:>8}", "n", "c_n", "root", "ratio");
    for row in connective_estimates(counts)? {
        println!(
            "{:>3} {:>10} {:>8.4} {:>8}",
            row.n,
            counts[row.n],
            row.root,
            row.kesten_ratio.map(|r| format!("{r:.4}")).unwrap_or_default()
        );
    }

    assert!(check_submultiplicative(counts).is_empty());
    println!("\nsub-multiplicativity holds on the whole table");

    let fixed = fit_growth_law(counts, (4, n_max), Some(11.0 / 32.0))?;
    let free = fit_growth_law(counts, (4, n_max), None)?;
    println!(
        "growth fit, exponent pinned to 11/32: mu = {:.5} (rms residual {:.2e})",
        fixed.param("mu").unwrap(),
        fixed.residual
    );
    println!(
        "growth fit, free exponent:            mu = {:.5}, exponent = {:.4} (rms residual {:.2e})",
        free.param("mu").unwrap(),
        free.param("exponent").unwrap(),
        free.residual
    );

    let envelope = envelope_constant(counts, free.param("mu").unwrap())?;
    println!(
        "square-root envelope constant at the fitted mu: c = {:.4}",
        envelope.param("c").unwrap()
    );

    let msd: Vec<f64> = (0..=n_max)
        .map(|n| {
            if n == 0 {
                0.0
            } else {
                let q = result.mean_sq_displacement(n).unwrap();
                let num: f64 = q.numer().to_string().parse().unwrap();
                let den: f64 = q.denom().to_string().parse().unwrap();
                num / den
            }
        })
        .collect();
    let flory = fit_displacement_exponent(&msd, (4, n_max))?;
    println!(
        "displacement log-log slope on n = 4..{n_max}: {:.4} (msd/n^2 strictly decreasing: {})",
        flory.param("slope").unwrap(),
        flory.param("ratio_strictly_decreasing").unwrap() == 1.0
    );
    println!("\n(small-n probes only; no asymptotic accuracy is claimed)");
    Ok(())
}
