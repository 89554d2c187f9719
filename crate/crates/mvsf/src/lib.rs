//! Matrix-valued spherical functions on the complex projective plane.
//!
//! The K-orbit reduction of the pair (SU(3), U(2)) turns each spherical
//! function of type (n, ell) into a vector of ell+1 scalar functions of one
//! variable, jointly diagonalizing two ordinary differential operators D and
//! E. This crate constructs those joint eigenfunctions exactly:
//!
//! - [`repr`]: index parametrizations, eigenvalue maps, K-type action data
//! - [`operators`]: the t-variable operators D and E (nine coefficient
//!   matrices, three-term recursions) and the radial r-variable systems
//! - [`eigen`]: the matrix L(lambda), its spectrum and eigenvectors
//! - [`series`]: joint eigenfunctions as exact truncated power series for
//!   all integer n, plus the explicit radial family Psi
//! - [`hyper`]: generalized hypergeometric closed forms (ell <= 2) and the
//!   shifted-parameter conjecture probe
//! - [`analysis`]: the weighted inner product, Gram matrices, orthogonality
//!   and boundary admissibility
//! - [`bispectral`]: the three-term recursion in the spectral variable w
//!   (ell = 2) and its exact verification
//! - [`checks`]: grid verification suites aggregating all of the above
//! - [`cli`]: the batch command-line front end
//!
//! All algebra is exact rational arithmetic; every identity asserted by the
//! verification suites is an equality of rationals, not a tolerance check.
//! Floating point appears only in explicitly approximate evaluation paths.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example series_solutions`.

pub mod analysis;
pub mod bispectral;
pub mod checks;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod hyper;
pub mod io;
pub mod matrix;
pub mod operators;
pub mod poly;
pub mod rat;
pub mod repr;
pub mod series;

pub use error::{Error, Result};
pub use rat::Rat;
