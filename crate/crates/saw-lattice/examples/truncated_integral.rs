//! The truncated main integral: the convolution of all pair-kernel
//! transforms at lattice frequency zero, split into a cube around the
//! origin and its complement. The unsplit value equals the domain
//! volume, which gives an independent cross-check.
//!
//! Run with: cargo run --release --example truncated_integral

use saw_lattice::fourier::{default_delta, truncated_main_integral, volume_term};
use saw_lattice::mc::McConfig;

fn main() -> saw_lattice::Result<()> {
    let (n, d) = (2usize, 2usize);
    let delta = default_delta(n, d)?;
    println!("default truncation radius: {delta}");

    let ti = truncated_main_integral(n, d, delta, &McConfig::new(4_000_000, 7))?;
    let tail = ti.tail.expect("n = 2 estimates the complement");
    println!(
        "cube part   ({} dims): {:.4} +- {:.4}",
        ti.dimension, ti.inside.value, ti.inside.std_error
    );
    println!("complement:            {:.4} +- {:.4}", tail.value, tail.std_error);
    println!(
        "split total:           {:.4} +- {:.4}",
        ti.inside.value + tail.value,
        (ti.inside.std_error.powi(2) + tail.std_error.powi(2)).sqrt()
    );

    let full = volume_term(n, d, &McConfig::new(8_000_000, 8));
    println!("domain volume (4-dim): {:.4} +- {:.4}", full.value, full.std_error);
    println!(
        "concentration in the cube: {:.3}",
        ti.concentration().unwrap()
    );

    // shrink the cube and the inside part vanishes
    let tiny = truncated_main_integral(n, d, 0.02, &McConfig::new(1_000_000, 9))?;
    println!(
        "\nat delta = 0.02 the cube part shrinks to {:.5} +- {:.5}",
        tiny.inside.value, tiny.inside.std_error
    );
    Ok(())
}
