//! Error type shared by all library modules.

use thiserror::Error;

/// Errors produced by geometry construction, focusing and estimation routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Sensor lattice failed a construction invariant.
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// The difference coarray has no pair at lag 1, so no contiguous
    /// virtual aperture exists beyond the origin.
    #[error("difference coarray is not contiguous at the origin (lag 1 missing)")]
    NonContiguousAtOrigin,

    /// Operand shapes disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Spectra defined on different directional-cosine grids cannot be combined.
    #[error("directional-cosine grids do not match")]
    GridMismatch,

    /// The frequency ratio has no rational form within the denominator bound.
    #[error("cannot rationalize {num}/{den} with denominator <= {max_denominator}")]
    IrrationalRatio {
        num: f64,
        den: f64,
        max_denominator: u64,
    },

    /// Resampling toward a higher focus frequency would shrink the lag
    /// support below the coarray span.
    #[error("resampled correlation support would fall short of the coarray span")]
    InsufficientSupport,

    /// A correlation vector does not cover every lag of the contiguous coarray.
    #[error("correlation vector does not span lags 0..{expected}")]
    MissingLags { expected: usize },

    /// The iterative Hermitian eigensolver did not converge.
    #[error("eigendecomposition failed to converge")]
    ConvergenceFailure,

    /// Information criteria are undefined when every eigenvalue magnitude is zero.
    #[error("all eigenvalue magnitudes are zero")]
    NonPositiveEigenvalueMagnitudes,

    /// Estimate/truth bookkeeping disagrees.
    #[error("count mismatch: {0}")]
    CountMismatch(String),

    /// A scalar argument violated its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
