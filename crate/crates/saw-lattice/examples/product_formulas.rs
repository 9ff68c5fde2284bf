//! Truncated infinite products for sinc and J_1/x: convergence toward
//! the direct evaluations as the truncation order grows.
//!
//! Run with: cargo run --release --example product_formulas

use saw_lattice::special::{bessel_j, bessel_product, sinc, sinc_product, BesselZeroTable};

fn main() -> saw_lattice::Result<()> {
    let two_pi = 2.0 * std::f64::consts::PI;

    println!("sinc product at x = 0.25 (target sinc(pi/2) = {:.8}):", sinc(two_pi * 0.25));
    for m in [10usize, 100, 1_000, 10_000] {
        let p = sinc_product(0.25, m);
        println!("  M = {m:>6}: {p:.8}  (error {:+.2e})", p - sinc(two_pi * 0.25));
    }

    let table = BesselZeroTable::build(1.0, 10_000)?;
    let x = 1.0;
    let target = 2.0 * bessel_j(1.0, x)? / x;
    println!("\nBessel product at x = {x} (target 2 J_1(x)/x = {target:.8}):");
    for m in [10usize, 100, 1_000, 10_000] {
        let p = bessel_product(x, m, &table)?;
        println!("  M = {m:>6}: {p:.8}  (error {:+.2e})", p - target);
    }

    println!("\nworst error over x in [0, 5] at M = 10^4:");
    let mut worst_sinc = 0.0f64;
    let mut worst_bessel = 0.0f64;
    for i in 0..=100 {
        let x = i as f64 * 0.05;
        worst_sinc = worst_sinc.max((sinc_product(x, 10_000) - sinc(two_pi * x)).abs());
        let target = if x == 0.0 { 1.0 } else { 2.0 * bessel_j(1.0, x)? / x };
        worst_bessel = worst_bessel.max((bessel_product(x, 10_000, &table)? - target).abs());
    }
    println!("  sinc:   {worst_sinc:.2e}");
    println!("  bessel: {worst_bessel:.2e}");
    Ok(())
}
