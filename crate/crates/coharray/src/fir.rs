//! Kaiser-windowed sinc lowpass design for the correlation resampler.

/// Zeroth-order modified Bessel function of the first kind, by power series.
pub fn bessel_i0(x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= (half / k) * (half / k);
        sum += term;
        if term < sum * 1e-18 {
            return sum;
        }
        k += 1.0;
    }
}

/// Kaiser shape parameter for a given stopband attenuation in dB.
pub fn kaiser_beta(atten_db: f64) -> f64 {
    if atten_db > 50.0 {
        0.1102 * (atten_db - 8.7)
    } else if atten_db >= 21.0 {
        0.5842 * (atten_db - 21.0).powf(0.4) + 0.07886 * (atten_db - 21.0)
    } else {
        0.0
    }
}

/// Odd-length linear-phase lowpass: Kaiser-windowed sinc with cutoff
/// `cutoff_rad` (radians/sample) and passband gain `gain`. `half_len` taps on
/// each side of the center, `2 * half_len + 1` total.
pub fn lowpass(half_len: usize, cutoff_rad: f64, gain: f64, beta: f64) -> Vec<f64> {
    assert!(cutoff_rad > 0.0 && cutoff_rad <= std::f64::consts::PI);
    let alpha = half_len as f64;
    let denom = bessel_i0(beta);
    (0..=2 * half_len)
        .map(|n| {
            let x = n as f64 - alpha;
            let ideal = if x == 0.0 {
                cutoff_rad / std::f64::consts::PI
            } else {
                (cutoff_rad * x).sin() / (std::f64::consts::PI * x)
            };
            let t = x / alpha.max(1.0);
            let window = bessel_i0(beta * (1.0 - t * t).max(0.0).sqrt()) / denom;
            gain * ideal * window
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bessel_matches_known_values() {
        assert_relative_eq!(bessel_i0(0.0), 1.0);
        // I0(1) and I0(5) from tables
        assert_relative_eq!(bessel_i0(1.0), 1.2660658777520084, epsilon = 1e-12);
        assert_relative_eq!(bessel_i0(5.0), 27.239871823604442, epsilon = 1e-9);
    }

    #[test]
    fn beta_regimes() {
        assert_relative_eq!(kaiser_beta(60.0), 0.1102 * 51.3, epsilon = 1e-12);
        assert!(kaiser_beta(30.0) > 0.0);
        assert_eq!(kaiser_beta(10.0), 0.0);
    }

    #[test]
    fn lowpass_is_symmetric_with_expected_dc_gain() {
        let h = lowpass(24, std::f64::consts::PI / 3.0, 3.0, kaiser_beta(60.0));
        assert_eq!(h.len(), 49);
        for i in 0..h.len() {
            assert_relative_eq!(h[i], h[h.len() - 1 - i], epsilon = 1e-15);
        }
        // DC gain approaches the passband gain
        let dc: f64 = h.iter().sum();
        assert_relative_eq!(dc, 3.0, epsilon = 0.01);
        // stopband rejection: frequency response at 2x cutoff is tiny
        let omega = 2.0 * std::f64::consts::PI / 3.0;
        let (mut re, mut im) = (0.0, 0.0);
        for (n, &tap) in h.iter().enumerate() {
            re += tap * (omega * n as f64).cos();
            im -= tap * (omega * n as f64).sin();
        }
        let mag = (re * re + im * im).sqrt();
        assert!(mag < 3.0 * 1e-3, "stopband magnitude {mag}");
    }
}
