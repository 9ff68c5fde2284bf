//! Uniform sampling from the materialized walk lists: determinism and
//! empirical frequencies.
//!
//! Run with: cargo run --release --example uniform_sampling

use std::collections::HashMap;

use saw_lattice::enumerate::WalkPool;

fn main() -> saw_lattice::Result<()> {
    let pool = WalkPool::materialize(2, 6)?;

    let w = pool.sample_uniform(6, 42)?;
    println!("one uniform 6-step walk (seed 42): {:?}", w.points);
    assert_eq!(pool.sample_uniform(6, 42)?, w);
    println!("repeated call with the same seed returns the same walk");

    // frequency check over the four 1-step walks
    let draws = 200_000;
    let indices = pool.sample_many(1, 7, draws)?;
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for i in indices {
        *freq.entry(i).or_default() += 1;
    }
    println!("\nempirical frequencies over {draws} draws of the 4 unit walks:");
    let sigma = (0.25 * 0.75 / draws as f64).sqrt();
    for (idx, count) in freq.iter() {
        let p = *count as f64 / draws as f64;
        println!("  walk {idx}: {p:.4} (target 0.25 +- {:.4} at 3 sigma)", 3.0 * sigma);
        assert!((p - 0.25).abs() < 3.0 * sigma);
    }
    Ok(())
}
