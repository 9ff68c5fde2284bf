//! End-to-end Poisson recount of c_2 = 12: truncated frequency sums over
//! growing cubes, against the mollified lattice sum they converge to.
//!
//! Run with: cargo run --release --example poisson_recount

use saw_lattice::fourier::poisson::{poisson_recount, smoothed_lattice_sum, MollifierConfig};
use saw_lattice::fourier::{volume_term, DomainConvention};
use saw_lattice::mc::McConfig;

fn main() -> saw_lattice::Result<()> {
    let eps = 0.12;
    let v_max = 6;
    let moll = MollifierConfig::new(eps)?;
    let cfg = McConfig::new(8_000_000, 2024);

    // Interior thresholds: same lattice points, every one interior, so
    // the smoothed sum sits on the exact count.
    let rec = poisson_recount(2, 2, v_max, &moll, &cfg, DomainConvention::IntegerInterior)?;
    println!("truncated Poisson sums (eps = {eps}, interior thresholds):");
    for (v, e) in rec.partial_sums.iter().enumerate() {
        println!("  |v|_inf <= {v}: {:.4} +- {:.4}", e.value, e.std_error);
    }
    println!(
        "\nfinal estimate {:.4} +- {:.4} against the exact count 12",
        rec.estimate.value, rec.estimate.std_error
    );

    let smoothed = smoothed_lattice_sum(
        2,
        2,
        &moll,
        &McConfig::new(4_000_000, 7),
        DomainConvention::IntegerInterior,
    )?;
    println!(
        "mollified lattice sum (the untruncated target): {:.4} +- {:.4}",
        smoothed.value, smoothed.std_error
    );

    // With the standard thresholds the v = 0 term is the domain volume.
    let std_rec = poisson_recount(
        2,
        2,
        1,
        &moll,
        &McConfig::new(2_000_000, 5),
        DomainConvention::Standard,
    )?;
    let vol = volume_term(2, 2, &McConfig::new(2_000_000, 6));
    println!(
        "\nstandard thresholds: v = 0 term {:.4} +- {:.4} vs domain volume {:.4} +- {:.4}",
        std_rec.v0_term.value, std_rec.v0_term.std_error, vol.value, vol.std_error
    );
    Ok(())
}
