//! The Poisson volume term: Monte Carlo volume of the box-and-shell
//! domain, with the exact single-shell value as a check.
//!
//! Run with: cargo run --release --example volume_term

use saw_lattice::fourier::volume_term;
use saw_lattice::mc::McConfig;

fn main() {
    // n = 1 is a single planar shell with area pi (1 - 1/4)
    let exact = 0.75 * std::f64::consts::PI;
    let est = volume_term(1, 2, &McConfig::new(2_000_000, 1));
    println!(
        "n = 1: {:.5} +- {:.5}   (exact {exact:.5}, {:.2} sigma off)",
        est.value,
        est.std_error,
        (est.value - exact).abs() / est.std_error
    );

    for n in 2..=4usize {
        let est = volume_term(n, 2, &McConfig::new(4_000_000, n as u64));
        println!("n = {n}: {:.5} +- {:.5}", est.value, est.std_error);
    }
    println!("\nthe volume grows with n and trails the exact counts (c_2 = 12, c_3 = 36, c_4 = 100)");
}
