//! Error type shared by all modules of the crate.

use std::fmt;

/// Errors produced by geometry, schedule, solver and operator construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The origin lies inside or on the convex envelope of the spectrum;
    /// one-parameter stationary iteration is inapplicable.
    OriginInsideHull,
    /// A point set was empty or contained non-finite coordinates.
    InvalidPoints(String),
    /// Segment endpoints coincide.
    DegenerateSegment,
    /// The origin lies on the spectrum segment.
    OriginOnSegment,
    /// The circle search produced no admissible circle (cannot occur for a
    /// valid polygon; indicates an internal invariant violation).
    NoValidCircle,
    /// Real segment bounds violate 0 < a < b.
    InvalidSegment,
    /// Triangle vertices are inadmissible for the side heuristic.
    InvalidTriangle(String),
    /// Iteration parameter mu is zero.
    ZeroMu,
    /// Green's function evaluated at zero distance.
    ZeroDistance,
    /// Dyadic kernel evaluated at zero offset.
    ZeroOffset,
    /// Scatterer geometry does not fit the voxel grid.
    BodyOutsideGrid(String),
    /// Permittivity profile violates its invariants.
    InvalidProfile(String),
    /// Vector length does not match the operator dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// Incident-wave direction and polarization are not orthogonal unit vectors.
    NonTransverse,
    /// Eigensolve input is not square.
    NonSquare,
    /// The dense eigensolver failed to converge.
    ConvergenceFailure(String),
    /// An interval [min, max] had min > max, or a sweep list was unsorted.
    InvalidRange(String),
    /// Dense matrix export exceeds the supported size.
    DumpTooLarge { unknowns: usize, max: usize },
    /// Underlying I/O failure while writing an artifact.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OriginInsideHull => {
                write!(f, "origin lies inside the convex envelope of the spectrum")
            }
            Error::InvalidPoints(msg) => write!(f, "invalid point set: {msg}"),
            Error::DegenerateSegment => write!(f, "segment endpoints coincide"),
            Error::OriginOnSegment => write!(f, "origin lies on the spectrum segment"),
            Error::NoValidCircle => write!(f, "no admissible enclosing circle found"),
            Error::InvalidSegment => write!(f, "real segment requires 0 < a < b"),
            Error::InvalidTriangle(msg) => write!(f, "invalid triangle: {msg}"),
            Error::ZeroMu => write!(f, "iteration parameter mu must be nonzero"),
            Error::ZeroDistance => write!(f, "Green's function requires a positive distance"),
            Error::ZeroOffset => write!(f, "dyadic kernel requires a nonzero offset"),
            Error::BodyOutsideGrid(msg) => write!(f, "body does not fit the grid: {msg}"),
            Error::InvalidProfile(msg) => write!(f, "invalid permittivity profile: {msg}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NonTransverse => {
                write!(f, "direction and polarization must be orthogonal unit vectors")
            }
            Error::NonSquare => write!(f, "matrix must be square"),
            Error::ConvergenceFailure(msg) => write!(f, "eigensolver failed: {msg}"),
            Error::InvalidRange(msg) => write!(f, "invalid range: {msg}"),
            Error::DumpTooLarge { unknowns, max } => {
                write!(f, "dense dump limited to {max} unknowns, got {unknowns}")
            }
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
