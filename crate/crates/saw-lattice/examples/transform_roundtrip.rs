//! The determinant-1 change of variables between step vectors and
//! partial-sum vectors, shown on one walk and stress-tested on random
//! integer vectors.
//!
//! Run with: cargo run --release --example transform_roundtrip

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use saw_lattice::domain::{
    sigma_from_x, sigma_indicator, x_from_sigma, x_indicator, SigmaVector, StepVector,
};

fn main() -> saw_lattice::Result<()> {
    // east, north, north, west in the axis-grouped layout
    let x = StepVector::new(2, 4, vec![1, 0, 0, -1, 0, 1, 1, 0])?;
    let sigma = sigma_from_x(&x);
    println!("steps (axis blocks): {:?}", x.entries);
    println!("partial sums:        {:?}", sigma.entries);
    println!("decoded walk:        {:?}", x.decode().points);
    println!("x-indicator = {}, sigma-indicator = {}", x_indicator(&x), sigma_indicator(&sigma));
    assert_eq!(x_from_sigma(&sigma), x);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let trials = 100_000;
    for _ in 0..trials {
        let entries: Vec<i64> = (0..12).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
        let sigma = SigmaVector::new(2, 6, entries.clone())?;
        assert_eq!(sigma_from_x(&x_from_sigma(&sigma)).entries, entries);
    }
    println!("\nround trip is the identity on {trials} random integer vectors");

    for _ in 0..trials {
        let steps: Vec<i64> = (0..12).map(|_| rng.gen_range(-1i64..=1)).collect();
        let image = sigma_from_x(&StepVector::new(2, 6, steps)?);
        assert!(image.in_block_boxes());
    }
    println!("unit-box step vectors always land inside the block boxes");
    Ok(())
}
