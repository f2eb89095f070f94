//! Frequency-domain snapshot synthesis for broadband planewave sources.
//!
//! Snapshots are drawn directly in the frequency domain: for each band the
//! sensor vector is `x = A s + n` with circular complex Gaussian source
//! amplitudes and white sensor noise, independent across sources, snapshots
//! and bands.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::array::ArrayGeometry;
use crate::error::{Error, Result};

/// One far-field source: directional cosine and per-band linear power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceSpec {
    u: f64,
    power: f64,
}

impl SourceSpec {
    pub fn new(u: f64, power: f64) -> Result<Self> {
        if !(u.is_finite() && u.abs() <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "directional cosine {u} outside [-1, 1]"
            )));
        }
        if !(power > 0.0 && power.is_finite()) {
            return Err(Error::InvalidArgument("source power must be positive".into()));
        }
        Ok(Self { u, power })
    }

    /// Source with power `10^(snr_db/10)` relative to unit sensor noise.
    pub fn from_snr_db(u: f64, snr_db: f64) -> Result<Self> {
        Self::new(u, 10f64.powf(snr_db / 10.0))
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn power(&self) -> f64 {
        self.power
    }
}

/// Uniform inclusive grid of narrowband analysis frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct BandPlan {
    f_min_hz: f64,
    f_max_hz: f64,
    count: usize,
}

impl BandPlan {
    pub fn new(f_min_hz: f64, f_max_hz: f64, count: usize) -> Result<Self> {
        if !(f_min_hz > 0.0 && f_min_hz.is_finite() && f_max_hz.is_finite()) {
            return Err(Error::InvalidArgument("band edges must be positive".into()));
        }
        if f_max_hz < f_min_hz {
            return Err(Error::InvalidArgument("f_max below f_min".into()));
        }
        if count == 0 {
            return Err(Error::InvalidArgument("need at least one band".into()));
        }
        if count == 1 && f_max_hz != f_min_hz {
            return Err(Error::InvalidArgument(
                "a single band requires f_min == f_max".into(),
            ));
        }
        Ok(Self {
            f_min_hz,
            f_max_hz,
            count,
        })
    }

    /// Single analysis frequency.
    pub fn narrowband(f_hz: f64) -> Result<Self> {
        Self::new(f_hz, f_hz, 1)
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn f_min_hz(&self) -> f64 {
        self.f_min_hz
    }

    pub fn f_max_hz(&self) -> f64 {
        self.f_max_hz
    }

    /// Band-center of the plan (midpoint of the edges).
    pub fn center_hz(&self) -> f64 {
        0.5 * (self.f_min_hz + self.f_max_hz)
    }

    /// Frequency of band `m`.
    pub fn freq(&self, m: usize) -> f64 {
        if self.count == 1 {
            self.f_min_hz
        } else {
            let step = (self.f_max_hz - self.f_min_hz) / (self.count - 1) as f64;
            self.f_min_hz + step * m as f64
        }
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|m| self.freq(m))
    }
}

/// Complex DFT-coefficient cube: one `N x L` matrix per band.
#[derive(Debug, Clone)]
pub struct FrequencySnapshots {
    bands: Vec<DMatrix<Complex64>>,
    plan: BandPlan,
    num_snapshots: usize,
}

impl FrequencySnapshots {
    pub fn band(&self, m: usize) -> &DMatrix<Complex64> {
        &self.bands[m]
    }

    pub fn plan(&self) -> &BandPlan {
        &self.plan
    }

    pub fn num_snapshots(&self) -> usize {
        self.num_snapshots
    }

    pub fn num_sensors(&self) -> usize {
        self.bands[0].nrows()
    }
}

fn draw_cn(rng: &mut impl Rng, variance: f64) -> Complex64 {
    let scale = (variance / 2.0).sqrt();
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * scale, im * scale)
}

/// Draw a snapshot cube from an explicit RNG.
///
/// Draw order is fixed (band-major, snapshot-major, sources before noise) so
/// a given stream always produces the same cube.
pub fn generate_snapshots_from_rng<R: Rng>(
    geom: &ArrayGeometry,
    sources: &[SourceSpec],
    plan: &BandPlan,
    num_snapshots: usize,
    noise_power: f64,
    rng: &mut R,
) -> Result<FrequencySnapshots> {
    if num_snapshots == 0 {
        return Err(Error::DimensionMismatch("need at least one snapshot".into()));
    }
    if !(noise_power >= 0.0 && noise_power.is_finite()) {
        return Err(Error::InvalidArgument("noise power must be >= 0".into()));
    }
    let n = geom.len();
    let mut bands = Vec::with_capacity(plan.count());
    for f in plan.frequencies() {
        let manifold: Vec<_> = sources.iter().map(|s| geom.steering_vector(f, s.u)).collect();
        let mut x = DMatrix::<Complex64>::zeros(n, num_snapshots);
        for l in 0..num_snapshots {
            let mut col = x.column_mut(l);
            for (src, a) in sources.iter().zip(&manifold) {
                let amp = draw_cn(rng, src.power);
                for i in 0..n {
                    col[i] += amp * a[i];
                }
            }
            for i in 0..n {
                col[i] += draw_cn(rng, noise_power);
            }
        }
        bands.push(x);
    }
    Ok(FrequencySnapshots {
        bands,
        plan: plan.clone(),
        num_snapshots,
    })
}

/// Draw a snapshot cube fully determined by `seed`.
pub fn generate_snapshots(
    geom: &ArrayGeometry,
    sources: &[SourceSpec],
    plan: &BandPlan,
    num_snapshots: usize,
    noise_power: f64,
    seed: u64,
) -> Result<FrequencySnapshots> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_snapshots_from_rng(geom, sources, plan, num_snapshots, noise_power, &mut rng)
}

/// Exact covariance of the model at one frequency:
/// `R = sum_i p_i a(u_i) a(u_i)^H + noise_power I`.
pub fn ensemble_covariance(
    geom: &ArrayGeometry,
    sources: &[SourceSpec],
    freq_hz: f64,
    noise_power: f64,
) -> DMatrix<Complex64> {
    let n = geom.len();
    let mut r = DMatrix::<Complex64>::identity(n, n) * Complex64::new(noise_power, 0.0);
    for s in sources {
        let a = geom.steering_vector(freq_hz, s.u);
        for i in 0..n {
            for j in 0..n {
                r[(i, j)] += a[i] * a[j].conj() * s.power;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn mra() -> ArrayGeometry {
        ArrayGeometry::mra6(100.0, 1500.0).unwrap()
    }

    #[test]
    fn same_seed_is_bit_identical() {
        let g = mra();
        let plan = BandPlan::new(80.0, 120.0, 5).unwrap();
        let src = vec![SourceSpec::from_snr_db(0.2, 3.0).unwrap()];
        let a = generate_snapshots(&g, &src, &plan, 4, 1.0, 99).unwrap();
        let b = generate_snapshots(&g, &src, &plan, 4, 1.0, 99).unwrap();
        for m in 0..plan.count() {
            assert_eq!(a.band(m), b.band(m));
        }
        let c = generate_snapshots(&g, &src, &plan, 4, 1.0, 100).unwrap();
        assert_ne!(a.band(0), c.band(0));
    }

    #[test]
    fn noiseless_single_source_is_rank_one() {
        let g = mra();
        let plan = BandPlan::new(80.0, 120.0, 3).unwrap();
        let src = vec![SourceSpec::new(0.4, 2.0).unwrap()];
        let snaps = generate_snapshots(&g, &src, &plan, 6, 0.0, 7).unwrap();
        for m in 0..3 {
            let a = g.steering_vector(plan.freq(m), 0.4);
            let x = snaps.band(m);
            for l in 0..6 {
                // every column is a scalar multiple of the steering vector
                let scale = x[(0, l)] / a[0];
                for i in 0..g.len() {
                    let diff = (x[(i, l)] - scale * a[i]).norm();
                    assert!(diff < 1e-12, "band {m} col {l} row {i}: {diff}");
                }
            }
        }
    }

    #[test]
    fn noise_only_sample_covariance_approaches_identity() {
        let g = mra();
        let plan = BandPlan::narrowband(100.0).unwrap();
        let l = 20_000;
        let snaps = generate_snapshots(&g, &[], &plan, l, 2.0, 5).unwrap();
        let x = snaps.band(0);
        let r = x * x.adjoint() / Complex64::new(l as f64, 0.0);
        for i in 0..6 {
            for j in 0..6 {
                let expect = if i == j { 2.0 } else { 0.0 };
                assert_relative_eq!(r[(i, j)].re, expect, epsilon = 0.08);
                assert_relative_eq!(r[(i, j)].im, 0.0, epsilon = 0.08);
            }
        }
    }

    #[test]
    fn ensemble_covariance_cases() {
        let g = mra();
        // no sources
        let r = ensemble_covariance(&g, &[], 90.0, 1.7);
        for i in 0..6 {
            for j in 0..6 {
                let expect = if i == j { 1.7 } else { 0.0 };
                assert_relative_eq!(r[(i, j)].re, expect, epsilon = 1e-14);
            }
        }
        // one unit broadside source, no noise: all-ones matrix
        let r = ensemble_covariance(&g, &[SourceSpec::new(0.0, 1.0).unwrap()], 100.0, 0.0);
        for v in r.iter() {
            assert_relative_eq!(v.re, 1.0, epsilon = 1e-14);
            assert_relative_eq!(v.im, 0.0, epsilon = 1e-14);
        }
        // trace identity
        let srcs = vec![
            SourceSpec::new(0.1, 2.0).unwrap(),
            SourceSpec::new(-0.6, 0.5).unwrap(),
        ];
        let r = ensemble_covariance(&g, &srcs, 113.0, 0.25);
        let tr: f64 = (0..6).map(|i| r[(i, i)].re).sum();
        assert_relative_eq!(tr, 6.0 * (2.0 + 0.5 + 0.25), epsilon = 1e-12);
    }

    #[test]
    fn sample_covariance_converges_to_ensemble() {
        let g = mra();
        let plan = BandPlan::narrowband(100.0).unwrap();
        let srcs = vec![
            SourceSpec::new(0.0, 1.0).unwrap(),
            SourceSpec::new(0.45, 1.0).unwrap(),
        ];
        let l = 100_000;
        let snaps = generate_snapshots(&g, &srcs, &plan, l, 1.0, 11).unwrap();
        let x = snaps.band(0);
        let r = x * x.adjoint() / Complex64::new(l as f64, 0.0);
        let r0 = ensemble_covariance(&g, &srcs, 100.0, 1.0);
        let num: f64 = r
            .iter()
            .zip(r0.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let den: f64 = r0.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        assert!(
            num / den < 5.0 / (l as f64).sqrt(),
            "relative frobenius error {}",
            num / den
        );
    }

    #[test]
    fn distinct_bands_are_uncorrelated() {
        let g = mra();
        let plan = BandPlan::new(80.0, 120.0, 2).unwrap();
        let src = vec![SourceSpec::new(0.0, 4.0).unwrap()];
        let l = 50_000;
        let snaps = generate_snapshots(&g, &src, &plan, l, 0.0, 3).unwrap();
        let (x0, x1) = (snaps.band(0), snaps.band(1));
        // cross-correlation of sensor 0 signals between bands
        let mut acc = Complex64::new(0.0, 0.0);
        for l_ in 0..l {
            acc += x0[(0, l_)] * x1[(0, l_)].conj();
        }
        let cross = (acc / l as f64).norm();
        assert!(cross < 5.0 * 4.0 / (l as f64).sqrt(), "cross {cross}");
    }

    #[test]
    fn argument_validation() {
        assert!(SourceSpec::new(1.5, 1.0).is_err());
        assert!(SourceSpec::new(0.0, 0.0).is_err());
        assert!(BandPlan::new(80.0, 40.0, 3).is_err());
        assert!(BandPlan::new(80.0, 120.0, 0).is_err());
        assert!(BandPlan::new(80.0, 120.0, 1).is_err());
        let g = mra();
        let plan = BandPlan::narrowband(100.0).unwrap();
        assert!(generate_snapshots(&g, &[], &plan, 0, 1.0, 0).is_err());
    }
}
