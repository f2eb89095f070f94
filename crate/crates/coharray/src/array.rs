//! Sparse linear array geometry and its difference coarray.
//!
//! Arrays live on a half-wavelength lattice: every sensor sits at an integer
//! multiple of the fundamental spacing `d`. The difference coarray collects
//! all pairwise sensor separations; its contiguous region around the origin
//! acts as a virtual uniform line array that is longer than the physical one.

use std::collections::BTreeMap;

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Sparse linear array on an integer lattice.
///
/// `indices` are the sensor positions in lattice units (strictly increasing),
/// `spacing_m` is the lattice pitch `d` in meters and `speed_mps` the field
/// propagation speed.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayGeometry {
    indices: Vec<u32>,
    spacing_m: f64,
    speed_mps: f64,
}

impl ArrayGeometry {
    pub fn new(indices: Vec<u32>, spacing_m: f64, speed_mps: f64) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidGeometry("no sensors".into()));
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidGeometry(
                "sensor indices must be strictly increasing".into(),
            ));
        }
        if !(spacing_m > 0.0 && spacing_m.is_finite()) {
            return Err(Error::InvalidGeometry("spacing must be positive".into()));
        }
        if !(speed_mps > 0.0 && speed_mps.is_finite()) {
            return Err(Error::InvalidGeometry(
                "propagation speed must be positive".into(),
            ));
        }
        Ok(Self {
            indices,
            spacing_m,
            speed_mps,
        })
    }

    /// Geometry from a design frequency: the lattice pitch is set to half the
    /// wavelength at `design_freq_hz`.
    pub fn on_half_wavelength_lattice(
        indices: Vec<u32>,
        design_freq_hz: f64,
        speed_mps: f64,
    ) -> Result<Self> {
        if !(design_freq_hz > 0.0 && design_freq_hz.is_finite()) {
            return Err(Error::InvalidGeometry(
                "design frequency must be positive".into(),
            ));
        }
        let spacing = speed_mps / (2.0 * design_freq_hz);
        Self::new(indices, spacing, speed_mps)
    }

    /// Six-sensor minimum redundancy array at lattice positions
    /// `[1, 2, 5, 6, 12, 14]`, half-wavelength pitch at `design_freq_hz`.
    pub fn mra6(design_freq_hz: f64, speed_mps: f64) -> Result<Self> {
        Self::on_half_wavelength_lattice(vec![1, 2, 5, 6, 12, 14], design_freq_hz, speed_mps)
    }

    /// Two-level nested array: a dense inner line of `inner` sensors at
    /// lattice positions `1..=inner` and an outer line of `outer` sensors at
    /// multiples of `inner + 1`.
    pub fn nested(inner: u32, outer: u32, design_freq_hz: f64, speed_mps: f64) -> Result<Self> {
        if inner == 0 || outer == 0 {
            return Err(Error::InvalidGeometry(
                "nested subarrays must be non-empty".into(),
            ));
        }
        let mut idx: Vec<u32> = (1..=inner).collect();
        idx.extend((1..=outer).map(|i| i * (inner + 1)));
        Self::on_half_wavelength_lattice(idx, design_freq_hz, speed_mps)
    }

    /// Coprime pair: `m` sensors at multiples of `n` and `n` sensors at
    /// multiples of `m`, sharing the origin. Requires `gcd(m, n) = 1`.
    pub fn coprime(m: u32, n: u32, design_freq_hz: f64, speed_mps: f64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidGeometry(
                "coprime subarrays must be non-empty".into(),
            ));
        }
        if gcd(m as u64, n as u64) != 1 {
            return Err(Error::InvalidGeometry(format!(
                "{m} and {n} are not coprime"
            )));
        }
        let mut idx: Vec<u32> = (0..m).map(|i| i * n).collect();
        idx.extend((0..n).map(|j| j * m));
        idx.sort_unstable();
        idx.dedup();
        Self::on_half_wavelength_lattice(idx, design_freq_hz, speed_mps)
    }

    /// Number of physical sensors.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sensor positions in lattice units.
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Lattice pitch `d` in meters.
    pub fn spacing_m(&self) -> f64 {
        self.spacing_m
    }

    /// Propagation speed in m/s.
    pub fn speed_mps(&self) -> f64 {
        self.speed_mps
    }

    /// Frequency whose half wavelength equals the lattice pitch.
    pub fn design_freq_hz(&self) -> f64 {
        self.speed_mps / (2.0 * self.spacing_m)
    }

    /// Position of sensor `n` in meters.
    pub fn position_m(&self, n: usize) -> f64 {
        self.indices[n] as f64 * self.spacing_m
    }

    /// Phase advance per lattice step at frequency `f`, in radians. Equals
    /// `pi * f / f_design`.
    pub fn lattice_phase_rate(&self, freq_hz: f64) -> f64 {
        2.0 * std::f64::consts::PI * freq_hz * self.spacing_m / self.speed_mps
    }

    /// Plane-wave steering vector at frequency `f` toward directional cosine
    /// `u`: element `n` is `exp(j 2 pi f d_n u / c)`.
    pub fn steering_vector(&self, freq_hz: f64, u: f64) -> DVector<Complex64> {
        let rate = self.lattice_phase_rate(freq_hz);
        DVector::from_iterator(
            self.len(),
            self.indices
                .iter()
                .map(|&ix| Complex64::from_polar(1.0, rate * ix as f64 * u)),
        )
    }
}

/// Difference coarray of a sparse array: pair multiplicities per lag and the
/// contiguous span around the origin.
#[derive(Debug, Clone)]
pub struct Coarray {
    span: usize,
    weights: Vec<u32>,
    pair_sets: Vec<Vec<(usize, usize)>>,
    full_weights: BTreeMap<i64, u32>,
}

impl Coarray {
    /// Contiguous half-span plus one: lags `0..span` all have at least one pair.
    pub fn span(&self) -> usize {
        self.span
    }

    /// Multiplicity of lag `k` within the contiguous region.
    pub fn weight(&self, k: i64) -> u32 {
        self.weights[(k + self.span as i64 - 1) as usize]
    }

    /// Weights over the contiguous region, lag `-(P-1)..=P-1` ascending.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Ordered sensor-index pairs `(n1, n2)` with `index(n1) - index(n2) = k`.
    pub fn pairs(&self, k: i64) -> &[(usize, usize)] {
        &self.pair_sets[(k + self.span as i64 - 1) as usize]
    }

    /// Weights over the full (possibly holey) coarray, keyed by lag.
    pub fn full_weights(&self) -> &BTreeMap<i64, u32> {
        &self.full_weights
    }
}

/// Enumerate every ordered sensor pair and collect the difference coarray.
///
/// The contiguous span `P` is the largest `L` such that all lags `0..L` occur.
/// A multi-sensor array whose coarray misses lag 1 has no usable contiguous
/// region and is rejected.
pub fn difference_coarray(geom: &ArrayGeometry) -> Result<Coarray> {
    let n = geom.len();
    let idx = geom.indices();
    let mut full: BTreeMap<i64, u32> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let k = idx[a] as i64 - idx[b] as i64;
            *full.entry(k).or_insert(0) += 1;
        }
    }
    if n > 1 && !full.contains_key(&1) {
        return Err(Error::NonContiguousAtOrigin);
    }
    let mut span = 1usize;
    while full.contains_key(&(span as i64)) {
        span += 1;
    }
    let p = span;
    let mut weights = vec![0u32; 2 * p - 1];
    let mut pair_sets = vec![Vec::new(); 2 * p - 1];
    for a in 0..n {
        for b in 0..n {
            let k = idx[a] as i64 - idx[b] as i64;
            if k.unsigned_abs() as usize <= p - 1 {
                let at = (k + p as i64 - 1) as usize;
                weights[at] += 1;
                pair_sets[at].push((a, b));
            }
        }
    }
    Ok(Coarray {
        span: p,
        weights,
        pair_sets,
        full_weights: full,
    })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
