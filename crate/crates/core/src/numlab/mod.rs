//! Floating-point cross-checks: finite-difference Schrödinger spectra and sampled
//! plot data.

mod eigen;
mod grid;
mod sample;

pub use eigen::{eigen_solve, eigenvector, parity, tridiagonal_eigenvalues};
pub use grid::{check_no_poles, GridSpec, DEFAULT_HALF_WIDTH, DEFAULT_POINTS};
pub use sample::{linspace, sample, to_csv, Sampleable};
