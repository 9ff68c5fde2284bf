//! Three routes to the same integer: backtracking enumeration, the
//! step-vector indicator sum, and the partial-sum indicator sum.
//!
//! Run with: cargo run --release --example recount_methods

use std::time::Instant;

use saw_lattice::domain::{count_by_sigma_sum, count_by_x_sum};
use saw_lattice::enumerate::enumerate_saws;

fn main() -> saw_lattice::Result<()> {
    let budget = 4_000_000_000;
    println!("{:>3} {:>10} {:>10} {:>10}", "n", "enum", "x-sum", "sigma-sum");
    for n in 0..=6usize {
        let t = Instant::now();
        let by_enum = enumerate_saws(2, n, false)?.counts[n].clone();
        let t_enum = t.elapsed();

        let t = Instant::now();
        let by_x = count_by_x_sum(2, n, budget)?;
        let t_x = t.elapsed();

        let t = Instant::now();
        let by_sigma = count_by_sigma_sum(2, n, budget)?;
        let t_sigma = t.elapsed();

        assert_eq!(by_x, by_enum);
        assert_eq!(by_sigma, by_enum);
        println!(
            "{n:>3} {by_enum:>10} {by_x:>10} {by_sigma:>10}   ({t_enum:.1?} / {t_x:.1?} / {t_sigma:.1?})"
        );
    }
    println!("\nall three methods agree exactly");
    Ok(())
}
