//! Second-order statistics: sample covariance, unbiased coarray correlation
//! extraction and spatial smoothing.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::array::Coarray;
use crate::error::{Error, Result};
use crate::synthesis::FrequencySnapshots;

/// Frequency context of a correlation vector: a raw narrowband estimate or a
/// coherently focused one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorrelationFreq {
    Band(f64),
    Focused(f64),
}

impl CorrelationFreq {
    pub fn hz(&self) -> f64 {
        match *self {
            CorrelationFreq::Band(f) | CorrelationFreq::Focused(f) => f,
        }
    }
}

/// Coarray-lag-indexed correlation estimates for lags `-(P-1)..=P-1`.
///
/// Conjugate symmetry `r(-k) = r(k)*` holds by construction and `r(0)` is
/// kept real.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationVector {
    values: Vec<Complex64>,
    span: usize,
    freq: CorrelationFreq,
}

impl CorrelationVector {
    /// Build from the right half `r(0), r(1), ..., r(P-1)`; negative lags are
    /// mirrored by conjugation and the zero lag is forced real.
    pub fn from_right_half(half: &[Complex64], freq: CorrelationFreq) -> Result<Self> {
        if half.is_empty() {
            return Err(Error::MissingLags { expected: 1 });
        }
        let p = half.len();
        let mut values = vec![Complex64::default(); 2 * p - 1];
        values[p - 1] = Complex64::new(half[0].re, 0.0);
        for k in 1..p {
            values[p - 1 + k] = half[k];
            values[p - 1 - k] = half[k].conj();
        }
        Ok(Self {
            values,
            span: p,
            freq,
        })
    }

    /// Build from all `2P-1` lags ascending; `expected_span` guards against
    /// truncated inputs.
    pub fn from_lags(
        values: Vec<Complex64>,
        expected_span: usize,
        freq: CorrelationFreq,
    ) -> Result<Self> {
        if values.len() != 2 * expected_span - 1 || expected_span == 0 {
            return Err(Error::MissingLags {
                expected: expected_span,
            });
        }
        Ok(Self {
            values,
            span: expected_span,
            freq,
        })
    }

    /// Contiguous half-span plus one.
    pub fn span(&self) -> usize {
        self.span
    }

    pub fn freq(&self) -> CorrelationFreq {
        self.freq
    }

    /// Value at lag `k`, `|k| <= P-1`.
    pub fn lag(&self, k: i64) -> Complex64 {
        self.values[(k + self.span as i64 - 1) as usize]
    }

    /// All lags ascending, `-(P-1)..=P-1`.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Lags `0..=P-1`.
    pub fn right_half(&self) -> &[Complex64] {
        &self.values[self.span - 1..]
    }
}

/// Sample covariance of band `m`: `R = (1/L) sum_l x_l x_l^H`.
pub fn sample_covariance(snapshots: &FrequencySnapshots, m: usize) -> DMatrix<Complex64> {
    let x = snapshots.band(m);
    let l = snapshots.num_snapshots() as f64;
    (x * x.adjoint()) / Complex64::new(l, 0.0)
}

/// Average the covariance entries of every sensor pair at each coarray lag:
/// `r(k) = (1/eta(k)) sum_{(n1,n2) in zeta(k)} R[n1, n2]`.
///
/// Only lags `k >= 0` are extracted; negative lags follow from conjugate
/// symmetry, which is exact whenever `R` is Hermitian.
pub fn coarray_correlation(
    r: &DMatrix<Complex64>,
    coarray: &Coarray,
    band_hz: f64,
) -> CorrelationVector {
    let p = coarray.span();
    let mut half = Vec::with_capacity(p);
    for k in 0..p as i64 {
        let pairs = coarray.pairs(k);
        let mut acc = Complex64::default();
        for &(a, b) in pairs {
            acc += r[(a, b)];
        }
        half.push(acc / pairs.len() as f64);
    }
    CorrelationVector::from_right_half(&half, CorrelationFreq::Band(band_hz))
        .expect("coarray span is at least 1")
}

/// Spatially smoothed augmented covariance: average the outer products of all
/// `P` contiguous length-`P` windows of the lag vector. Positive semi-definite
/// by construction and, for conjugate-symmetric inputs, exactly equal to
/// `R_lra^2 / P`.
pub fn spatial_smoothing_acm(r: &CorrelationVector) -> DMatrix<Complex64> {
    let p = r.span();
    let w = r.values();
    let mut out = DMatrix::<Complex64>::zeros(p, p);
    for s in 0..p {
        let win = &w[s..s + p];
        for i in 0..p {
            for j in 0..p {
                out[(i, j)] += win[i] * win[j].conj();
            }
        }
    }
    out / Complex64::new(p as f64, 0.0)
}
