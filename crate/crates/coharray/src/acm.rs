//! Augmented covariance matrices built from focused coarray correlations.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::correlation::CorrelationVector;
use crate::error::{Error, Result};

/// How an augmented covariance was assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcmKind {
    /// Lag-redundancy averaged: Hermitian Toeplitz, possibly indefinite.
    Lra,
    /// Spatially smoothed: positive semi-definite.
    SpatialSmoothing,
}

/// `P x P` augmented covariance with its construction metadata.
#[derive(Debug, Clone)]
pub struct AugmentedCovariance {
    matrix: DMatrix<Complex64>,
    kind: AcmKind,
    focus_hz: f64,
    provenance: String,
}

impl AugmentedCovariance {
    pub fn new(
        matrix: DMatrix<Complex64>,
        kind: AcmKind,
        focus_hz: f64,
        provenance: impl Into<String>,
    ) -> Self {
        Self {
            matrix,
            kind,
            focus_hz,
            provenance: provenance.into(),
        }
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn kind(&self) -> AcmKind {
        self.kind
    }

    /// Frequency whose manifold the matrix is aligned to.
    pub fn focus_hz(&self) -> f64 {
        self.focus_hz
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance = tag.into();
        self
    }

    /// Side length `P`.
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Dump as CSV, row-major, one `"re,im"` pair per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.matrix.nrows() {
            let mut first = true;
            for j in 0..self.matrix.ncols() {
                if !first {
                    out.push(',');
                }
                first = false;
                let v = self.matrix[(i, j)];
                out.push_str(&format!("{},{}", v.re, v.im));
            }
            out.push('\n');
        }
        out
    }
}

/// Hermitian Toeplitz ACM populated with lag-redundancy-averaged
/// correlations: entry `(i, j) = r(i - j)`.
pub fn lra_acm(r: &CorrelationVector) -> AugmentedCovariance {
    let p = r.span();
    let mut m = DMatrix::<Complex64>::zeros(p, p);
    for i in 0..p {
        for j in 0..p {
            m[(i, j)] = r.lag(i as i64 - j as i64);
        }
    }
    AugmentedCovariance::new(m, AcmKind::Lra, r.freq().hz(), "lra")
}

/// Spatially smoothed ACM derived from an LRA matrix: `R_ss = R_lra^2 / P`.
/// Shares the LRA eigenvectors; eigenvalues are squared and divided by `P`.
pub fn ss_acm_from_lra(acm: &AugmentedCovariance) -> Result<AugmentedCovariance> {
    if acm.kind() != AcmKind::Lra {
        return Err(Error::InvalidArgument(
            "spatial-smoothing conversion expects an LRA matrix".into(),
        ));
    }
    let p = acm.dim() as f64;
    let m = (acm.matrix() * acm.matrix()) / Complex64::new(p, 0.0);
    Ok(AugmentedCovariance::new(
        m,
        AcmKind::SpatialSmoothing,
        acm.focus_hz(),
        format!("{}-squared", acm.provenance()),
    ))
}
