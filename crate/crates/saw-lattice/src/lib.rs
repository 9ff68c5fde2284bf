//! Counting self-avoiding walks on Z^d through lattice-point domains.
//!
//! The crate provides four layers that check each other:
//!
//! - [`enumerate`]: exact backtracking enumeration of SAWs — the ground
//!   truth for counts, endpoint statistics and uniform samples.
//! - [`domain`]: the step-vector and partial-sum reformulations of the
//!   count as lattice-point sums over box-and-shell domains, related by a
//!   determinant-1 change of variables; exhaustive recounts must match
//!   the enumerator bit for bit.
//! - [`special`] and [`kernels`]: sinc and Bessel machinery and the
//!   closed-form Fourier transforms of the domain indicators.
//! - [`fourier`]: Monte Carlo verification of the kernels against their
//!   defining integrals, Poisson volume terms, the truncated main
//!   integral, and a small end-to-end Poisson recount of c_2.
//!
//! [`asymptotics`] fits connective-constant and displacement-exponent
//! probes on the exact small-n data. The `sawlat` binary exposes the
//! pipeline as batch subcommands; the crate's `examples/` directory holds
//! one runnable example per capability.

pub mod asymptotics;
pub mod cli;
pub mod domain;
pub mod enumerate;
pub mod error;
pub mod fourier;
pub mod kernels;
pub mod mc;
pub mod report;
pub mod special;
pub mod walk;

pub use error::{Error, Result};
