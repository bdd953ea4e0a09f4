//! Explicit model resolvents for hyperbolic ends (regular neighbourhoods,
//! rank-k cusps, maximal-rank cusps), the iterative parametrix built on top of
//! them, and the discretized Fredholm determinant whose zeros are scanned as
//! resonance candidates.
//!
//! The crate is organized along the pipeline:
//!
//! * [`special`] — complex Gamma, complex-order Bessel K/I and the
//!   Gamma-ratio coefficient families entering every kernel series.
//! * [`geometry`] — model charts, cusp lattices, weight functions and the
//!   nested cutoff families.
//! * [`resolvent`] — evaluation of the model resolvent kernels mode by mode.
//! * [`parametrix`] — the indicial recursion, per-chart parametrices and the
//!   glued instance-level parametrix.
//! * [`operator`] — discretized weighted kernel operators: singular values,
//!   operator norms, determinants.
//! * [`scan`] — determinant scans over complex discs, zero refinement,
//!   argument-principle counts and counting reports.

pub mod config;
pub mod error;
pub mod geometry;
pub mod operator;
pub mod parametrix;
pub mod quad;
pub mod resolvent;
pub mod scan;
pub mod special;
pub mod verify;

pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type Cplx = Complex64;

pub use error::EvalError;
