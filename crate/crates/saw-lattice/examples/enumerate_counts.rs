//! Exact enumeration: counts, squared-endpoint sums and mean squared
//! displacement for the square lattice, plus a d = 3 spot check.
//!
//! Run with: cargo run --release --example enumerate_counts

use saw_lattice::enumerate::enumerate_saws;

fn main() -> saw_lattice::Result<()> {
    let n_max = 12;
    let result = enumerate_saws(2, n_max, false)?;
    println!("square lattice, exact values up to n = {n_max}:");
    println!("{:>3} {:>12} {:>14} {:>12}", "n", "c_n", "sum |end|^2", "msd");
    for n in 0..=n_max {
        let msd = result.mean_sq_displacement(n)?;
        println!(
            "{n:>3} {:>12} {:>14} {:>12}",
            result.counts[n],
            result.sq_end_sums[n],
            format!("{}/{}", msd.numer(), msd.denom()),
        );
    }

    // symmetry-reduced mode must agree bit for bit
    let reduced = enumerate_saws(2, n_max, true)?;
    assert_eq!(result, reduced);
    println!("\nsymmetry-reduced enumeration agrees exactly");

    let d3 = enumerate_saws(3, 6, true)?;
    println!("\ncubic lattice: c_n for n <= 6:");
    for n in 0..=6 {
        println!("  c_{n} = {}", d3.counts[n]);
    }
    Ok(())
}
