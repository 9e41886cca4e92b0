//! Numerical toolkit for one-dimensional disordered quantum systems on a
//! periodic grid: generation of spatially correlated random potentials,
//! localization-landscape solves and the effective potential, discrete
//! Wigner transforms and phase-space maps, and spectral functions computed
//! by exact diagonalization, Chebyshev expansion, and the landscape-based
//! estimator.
//!
//! Units: the disorder correlation length is the unit of length and
//! `hbar = m = 1`, so the correlation energy is 1 and the disorder strength
//! `eta` equals the potential amplitude `V0`.

pub mod cyclic;
pub mod disorder;
pub mod eigensolve;
pub mod error;
pub mod fft;
pub mod grid;
pub mod harness;
pub mod histogram;
pub mod io;
pub mod landscape;
mod lapack;
pub mod phasespace;
pub mod spectral;

pub use error::{Error, Result};
pub use grid::Grid;
