use swchan_core::{MeasurementSet, SfflParams};

use crate::error::{Error, Result};

/// Least-squares intercept and slope of `PL = alpha + beta * 10 log10(d/d0)`.
///
/// `sigma_db` is the population (divisor N) standard deviation of the
/// residuals.
pub fn fit_sffl_ols(m: &MeasurementSet) -> Result<SfflParams> {
    let n = m.len();
    if n < swchan_core::MIN_SAMPLES {
        return Err(Error::TooFewPoints {
            needed: swchan_core::MIN_SAMPLES,
            found: n,
        });
    }
    let d0 = m.d0_m();
    let x: Vec<f64> = m.distances().map(|d| 10.0 * (d / d0).log10()).collect();
    let y: Vec<f64> = m.path_losses().collect();
    let nf = n as f64;
    let x_mean = x.iter().sum::<f64>() / nf;
    let y_mean = y.iter().sum::<f64>() / nf;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (xi, yi) in x.iter().zip(&y) {
        let dx = xi - x_mean;
        sxx += dx * dx;
        sxy += dx * (yi - y_mean);
    }
    if sxx.is_nan() || sxx <= 0.0 {
        return Err(Error::Degenerate("all distances are equal".into()));
    }
    let beta = sxy / sxx;
    let alpha = y_mean - beta * x_mean;
    let rss: f64 = x
        .iter()
        .zip(&y)
        .map(|(xi, yi)| (yi - alpha - beta * xi).powi(2))
        .sum();
    Ok(SfflParams::new(alpha, beta, (rss / nf).sqrt(), d0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use swchan_core::{path_loss_sffl, Frequency, Sample};

    fn set(points: Vec<(f64, f64)>) -> MeasurementSet {
        MeasurementSet::new(
            Frequency::new(140.0).unwrap(),
            points
                .into_iter()
                .map(|(d, pl)| Sample::new(d, pl))
                .collect(),
            0.1,
        )
        .unwrap()
    }

    #[test]
    fn recovers_exact_line() {
        let truth = SfflParams::new(70.0, 2.0, 0.0, 0.1).unwrap();
        let pts = (0..15)
            .map(|i| {
                let d = 0.1016 + 0.0508 * i as f64;
                (d, path_loss_sffl(&truth, d).unwrap())
            })
            .collect();
        let p = fit_sffl_ols(&set(pts)).unwrap();
        assert!((p.alpha_db() - 70.0).abs() < 1e-9);
        assert!((p.beta() - 2.0).abs() < 1e-9);
        assert!(p.sigma_db() < 1e-9);
    }

    #[test]
    fn matches_normal_equations() {
        // x = 10 log10(d / 0.1) = 0, 10, 20 for d = 0.1, 1, 10, so the
        // normal equations can be solved by hand:
        // y = 70, 91, 109 -> beta = (109 - 70) / 20 = 1.95,
        // alpha = mean(y) - beta * mean(x) = 90 - 19.5 = 70.5,
        // residuals = -0.5, 1, -0.5 -> sigma = sqrt(0.5)
        let p = fit_sffl_ols(&set(vec![(0.1, 70.0), (1.0, 91.0), (10.0, 109.0)])).unwrap();
        assert!((p.beta() - 1.95).abs() < 1e-12);
        assert!((p.alpha_db() - 70.5).abs() < 1e-12);
        assert!((p.sigma_db() - 0.5f64.sqrt()).abs() < 1e-12);
    }
}
