use std::f64::consts::PI;

use swchan_core::{MeasurementSet, StandingWaveParams};

use crate::config::FitConfig;
use crate::error::{Error, Result};
use crate::estimate::{
    estimate_k_from_period, initial_gamma_estimate, k_grid_estimate, magnitude_from_residuals,
};
use crate::ols::fit_sffl_ols;
use crate::refine::refine_fit;
use crate::report::FitReport;
use crate::residuals::{detect_extrema, residuals};

/// Fits the combined model to `m`.
///
/// Plain line first, then `k` from the spacing of residual maxima (or
/// minima), `|Γ|` from the residual extrema, and finally the joint
/// refinement. When fewer than two maxima and two minima are found, `k` and
/// the starting phase come from a grid search instead.
pub fn fit_channel(m: &MeasurementSet, cfg: &FitConfig) -> Result<FitReport> {
    cfg.validate().map_err(Error::InvalidConfig)?;
    let p = fit_sffl_ols(m)?;
    let r = residuals(m, &p)?;
    let ex = detect_extrema(&r)?;

    let (gamma, k, gamma_fallback, k_fallback) = if ex.maxima.len() >= 2 || ex.minima.len() >= 2 {
        let k = estimate_k_from_period(&ex.maxima)
            .or_else(|_| estimate_k_from_period(&ex.minima))?
            .min(PI / m.min_step_m());
        let init = initial_gamma_estimate(&r, k, cfg)?;
        (init.gamma, k, init.fallback, false)
    } else {
        let (magnitude, fallback) = match magnitude_from_residuals(&r, cfg) {
            Some(g) => (g, false),
            None => (cfg.fallback_gamma, true),
        };
        let (k, phase) = k_grid_estimate(&r, magnitude, PI / m.min_step_m(), cfg);
        let phase = if fallback { 0.0 } else { phase };
        (
            swchan_core::ComplexReflection::new(magnitude, phase)?,
            k,
            fallback,
            true,
        )
    };

    let init = StandingWaveParams::new(gamma, k)?;
    let mut report = refine_fit(m, &p, &init, cfg)?;
    report.extrema_found = ex.count();
    report.gamma_fallback = gamma_fallback;
    report.k_fallback = k_fallback;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use swchan_core::{Frequency, Sample};

    #[test]
    fn three_point_exact_line_is_plain_model() {
        let m = MeasurementSet::new(
            Frequency::new(140.0).unwrap(),
            [0.1, 0.2, 0.4]
                .iter()
                .map(|&d| Sample::new(d, 70.0 + 20.0 * (d / 0.1_f64).log10()))
                .collect(),
            0.1,
        )
        .unwrap();
        let r = fit_channel(&m, &FitConfig::default()).unwrap();
        assert!(r.gamma_fallback);
        assert!(r.k_fallback);
        assert_eq!(r.extrema_found, 0);
        assert!(r.model.standing.gamma().magnitude() <= 0.05);
        assert!((r.model.sffl.beta() - 2.0).abs() < 1e-9);
        assert!(r.rms_combined_db < 1e-9);
    }
}
