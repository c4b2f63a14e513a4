use std::f64::consts::{PI, TAU};

use swchan_core::{db, gamma_mag_from_extrema, ComplexReflection};

use crate::config::FitConfig;
use crate::error::{Error, Result};
use crate::residuals::{detect_extrema, Extremum, ResidualSeries};

/// `k = π / T`, with `T` the mean spacing of consecutive extrema.
pub fn estimate_k_from_period(extrema: &[Extremum]) -> Result<f64> {
    if extrema.len() < 2 {
        return Err(Error::InsufficientExtrema {
            found: extrema.len(),
        });
    }
    let spacings: Vec<f64> = extrema
        .windows(2)
        .map(|w| w[1].distance_m - w[0].distance_m)
        .collect();
    let period = spacings.iter().sum::<f64>() / spacings.len() as f64;
    if period.is_nan() || period <= 0.0 {
        return Err(Error::Degenerate(format!(
            "extrema spacing {period} m is not positive"
        )));
    }
    Ok(PI / period)
}

/// Starting reflection coefficient, and whether the fallback was used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialGamma {
    pub gamma: ComplexReflection,
    pub fallback: bool,
}

/// `|Γ|` from the largest residual maximum and smallest residual minimum.
///
/// The dB extrema are voltage levels: `V = 10^(dB / 20)`. Returns `None`
/// when the series has no maximum/minimum pair.
pub(crate) fn magnitude_from_residuals(r: &ResidualSeries, cfg: &FitConfig) -> Option<f64> {
    let ex = detect_extrema(r).ok()?;
    let v_max = ex
        .maxima
        .iter()
        .map(|e| e.value_db)
        .fold(f64::NAN, f64::max);
    let v_min = ex
        .minima
        .iter()
        .map(|e| e.value_db)
        .fold(f64::NAN, f64::min);
    let g =
        gamma_mag_from_extrema(db::amplitude_from_db(v_max), db::amplitude_from_db(v_min)).ok()?;
    Some(g.min(cfg.gamma_max))
}

/// Sum of squared differences between the residuals and the standing-wave
/// gain, i.e. the combined-model misfit with the line held at the plain fit.
fn residual_misfit(r: &ResidualSeries, magnitude: f64, phase: f64, k: f64) -> f64 {
    let g2 = 1.0 + magnitude * magnitude;
    r.points
        .iter()
        .map(|&(d, res)| {
            let gain =
                10.0 * (g2 + 2.0 * magnitude * (2.0 * k * (d - r.d0_m) + phase).cos()).log10();
            (gain - res).powi(2)
        })
        .sum()
}

fn best_phase(r: &ResidualSeries, magnitude: f64, k: f64, steps: usize) -> (f64, f64) {
    (0..steps)
        .map(|i| {
            let phase = TAU * i as f64 / steps as f64;
            (phase, residual_misfit(r, magnitude, phase, k))
        })
        .fold(
            (0.0, f64::INFINITY),
            |best, c| if c.1 < best.1 { c } else { best },
        )
}

/// Initial `Γ` at a given `k`: magnitude from the residual extrema, phase
/// from a grid over `[0, 2π)`.
///
/// Without a maximum/minimum pair the configured fallback magnitude is
/// returned with zero phase.
pub fn initial_gamma_estimate(r: &ResidualSeries, k: f64, cfg: &FitConfig) -> Result<InitialGamma> {
    let Some(magnitude) = magnitude_from_residuals(r, cfg) else {
        return Ok(InitialGamma {
            gamma: ComplexReflection::new(cfg.fallback_gamma, 0.0)?,
            fallback: true,
        });
    };
    let phase = if magnitude > 0.0 {
        best_phase(r, magnitude, k, cfg.phase_steps).0
    } else {
        0.0
    };
    Ok(InitialGamma {
        gamma: ComplexReflection::new(magnitude, phase)?,
        fallback: false,
    })
}

/// Grid search for `(k, phase)` at a fixed magnitude, used when the
/// residuals show too few extrema to read off a period. `k` runs over
/// `k_max * j / k_steps` for `j = 1..=k_steps`; ties keep the smaller `k`.
pub fn k_grid_estimate(
    r: &ResidualSeries,
    magnitude: f64,
    k_max: f64,
    cfg: &FitConfig,
) -> (f64, f64) {
    let mut best = (k_max / cfg.k_steps as f64, 0.0, f64::INFINITY);
    for j in 1..=cfg.k_steps {
        let k = k_max * j as f64 / cfg.k_steps as f64;
        let (phase, misfit) = best_phase(r, magnitude, k, cfg.phase_steps);
        if misfit < best.2 {
            best = (k, phase, misfit);
        }
    }
    (best.0, best.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use swchan_core::{ComplexReflection, StandingWaveParams};

    fn ext(d: f64) -> Extremum {
        Extremum {
            distance_m: d,
            value_db: 0.0,
        }
    }

    #[test]
    fn k_from_two_maxima() {
        let k = estimate_k_from_period(&[ext(0.2), ext(0.3)]).unwrap();
        assert!((k - 10.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn k_times_period_is_pi() {
        for t in [0.013, 0.1, 0.37] {
            let k = estimate_k_from_period(&[ext(0.1), ext(0.1 + t), ext(0.1 + 2.0 * t)]).unwrap();
            assert!((k * t - PI).abs() < 1e-12);
        }
    }

    #[test]
    fn k_from_jittered_spacing() {
        // spacings 0.09, 0.11, 0.13 -> mean 0.11
        let k = estimate_k_from_period(&[ext(0.2), ext(0.29), ext(0.40), ext(0.53)]).unwrap();
        assert!((k - PI / 0.11).abs() < 1e-9);
    }

    #[test]
    fn k_needs_two_extrema() {
        assert_eq!(
            estimate_k_from_period(&[ext(0.2)]).unwrap_err(),
            Error::InsufficientExtrema { found: 1 }
        );
    }

    fn gain_series(mag: f64, phase: f64, k: f64, n: usize, span: f64) -> ResidualSeries {
        let s = StandingWaveParams::new(ComplexReflection::new(mag, phase).unwrap(), k).unwrap();
        ResidualSeries {
            points: (0..n)
                .map(|i| {
                    let d = 0.1 + span * i as f64 / (n - 1) as f64;
                    (d, s.gain_db_at_offset(d - 0.1))
                })
                .collect(),
            d0_m: 0.1,
        }
    }

    #[test]
    fn recovers_magnitude_from_dense_gain() {
        for mag in [0.05, 0.08, 0.2, 0.5] {
            let r = gain_series(mag, 0.7, 10.0 * PI, 2001, 0.5);
            let est = initial_gamma_estimate(&r, 10.0 * PI, &FitConfig::default()).unwrap();
            assert!(!est.fallback);
            assert!((est.gamma.magnitude() / mag - 1.0).abs() < 0.02);
            // 64-point phase grid resolution
            let dphi = (est.gamma.phase_rad() - 0.7).abs();
            assert!(dphi <= TAU / 64.0);
        }
    }

    #[test]
    fn zero_residuals_fall_back() {
        let r = ResidualSeries {
            points: (0..10).map(|i| (0.1 + 0.05 * i as f64, 0.0)).collect(),
            d0_m: 0.1,
        };
        let est = initial_gamma_estimate(&r, 10.0, &FitConfig::default()).unwrap();
        assert!(est.fallback);
        assert_eq!(est.gamma.magnitude(), 0.05);
        assert_eq!(est.gamma.phase_rad(), 0.0);
    }

    #[test]
    fn extrema_in_db_use_amplitude_convention() {
        // one maximum at +0.28 dB and one minimum at -0.79 dB
        let r = ResidualSeries {
            points: vec![
                (0.1, 0.0),
                (0.2, 0.28),
                (0.3, 0.0),
                (0.4, -0.79),
                (0.5, 0.0),
            ],
            d0_m: 0.1,
        };
        let g = magnitude_from_residuals(&r, &FitConfig::default()).unwrap();
        assert!((g - 0.061_516_376_487_464_86).abs() < 1e-12);
    }

    #[test]
    fn k_grid_finds_the_period() {
        let k_true = 10.0 * PI;
        let r = gain_series(0.1, 0.0, k_true, 400, 0.08);
        let (k, _) = k_grid_estimate(&r, 0.1, 200.0, &FitConfig::default());
        assert!((k - k_true).abs() <= 0.5, "k = {k}");
    }
}
