//! Coherent broadband focusing for sparse linear arrays.
//!
//! The crate covers the full processing chain for broadband direction finding
//! with sparse arrays whose difference coarray is contiguous:
//!
//! * [`array`] — lattice geometries (MRA, nested, coprime) and their
//!   difference coarrays;
//! * [`synthesis`] — frequency-domain snapshot generation for Gaussian
//!   planewave sources in white noise;
//! * [`correlation`] — sample covariance, unbiased coarray correlation
//!   extraction and spatial smoothing;
//! * [`focusing`] — the two coherent focusing routes: averaged spatial
//!   periodograms (AP) and rational-rate spatial correlation resampling (SCR);
//! * [`acm`] — Toeplitz (lag-redundancy averaged) and spatially smoothed
//!   augmented covariance matrices;
//! * [`estimation`] — eigen analysis, MDL / MDL-gap source enumeration,
//!   coarray MUSIC and the resolution / RMSE metrics;
//! * [`iss`] — the incoherent signal-subspace reference pipeline.

pub mod acm;
pub mod array;
pub mod correlation;
pub mod error;
pub mod estimation;
pub mod fir;
pub mod focusing;
pub mod iss;
pub mod synthesis;

pub use error::{Error, Result};
