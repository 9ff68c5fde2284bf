//! Analytic pair-kernel transforms against direct Monte Carlo
//! quadrature of their defining integrals, for every pair at n = 2.
//!
//! Run with: cargo run --release --example kernel_verification

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use saw_lattice::fourier::psi_hat_quadrature;
use saw_lattice::kernels::{psi_hat_analytic, support_volume, FourierPoint, KernelId, KernelVariant};
use saw_lattice::mc::McConfig;

fn main() -> saw_lattice::Result<()> {
    let (n, d) = (2usize, 2usize);
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    for k in 1..=n {
        for j in 0..k {
            let id = KernelId::new(n, d, j, k, KernelVariant::DerivedConsistent)?;
            let vol = support_volume(&id);
            let at_zero = psi_hat_analytic(&id, &FourierPoint::zero(d, n));
            println!(
                "pair ({j},{k}): support volume {vol:.6}, transform at 0 = {at_zero:.6}"
            );

            for _ in 0..4 {
                let xi = FourierPoint::new(
                    d,
                    n,
                    (0..d * n).map(|_| rng.gen_range(-1.0..1.0)).collect(),
                )?;
                let analytic = psi_hat_analytic(&id, &xi);
                let (re, im) = psi_hat_quadrature(&id, &xi, &McConfig::new(400_000, 5))?;
                let sigmas = (re.value - analytic).abs() / re.std_error;
                println!(
                    "  xi = [{:+.2} {:+.2} {:+.2} {:+.2}]  analytic {analytic:+.5}  quadrature {:+.5} +- {:.5}  ({sigmas:.2} sigma, imag {:+.1e})",
                    xi.xi[0], xi.xi[1], xi.xi[2], xi.xi[3], re.value, re.std_error, im.value
                );
                assert!(sigmas <= 3.0);
            }
        }
    }
    println!("\nevery pair agrees with its defining integral within 3 sigma");
    Ok(())
}
