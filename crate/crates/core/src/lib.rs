//! Stationary iteration methods for complex nonselfadjoint linear systems.
//!
//! The crate provides:
//!
//! - [`geometry`]: the optimal one-parameter iteration circle for a convex
//!   spectrum region on the complex plane (minimal viewing angle from the
//!   origin), plus a brute-force validation oracle.
//! - [`schedule`]: complex iteration-parameter sets for layered Chebyshev-type
//!   iteration over segments, rotated segments, circles and triangles.
//! - [`solver`]: generalized simple iteration (GSI), generalized Chebyshev
//!   iteration (GCI) and restarted GMRES drivers over a matrix-free
//!   [`solver::LinearOperator`], with residual tracking and cost-model
//!   reporting.
//! - [`vsie`]: a discretized volume-singular-integral-equation operator for
//!   electromagnetic scattering by a dielectric body on a uniform voxel grid,
//!   with an FFT-accelerated matvec and a dense assembly.
//! - [`spectral`]: dense eigensolves of small assembled operators and
//!   containment checks against predicted spectrum-localization regions.

pub mod error;
pub mod fft;
pub mod geometry;
pub mod linalg;
pub mod schedule;
pub mod solver;
pub mod spectral;
pub mod vsie;

pub use error::Error;

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
