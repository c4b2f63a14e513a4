use crate::error::{Error, Result};
use crate::params::{Frequency, SfflParams, StandingWaveParams};

/// Floating-intercept parameters and standing-wave term fitted at one
/// center frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelModel {
    pub frequency: Frequency,
    pub sffl: SfflParams,
    pub standing: StandingWaveParams,
}

impl ChannelModel {
    pub fn new(frequency: Frequency, sffl: SfflParams, standing: StandingWaveParams) -> Self {
        Self {
            frequency,
            sffl,
            standing,
        }
    }

    pub fn path_loss_db(&self, d: f64) -> Result<f64> {
        combined_path_loss(self, d)
    }
}

/// `alpha + 10 beta log10(d / d0)`; mean loss, no fading draw.
pub fn path_loss_sffl(p: &SfflParams, d: f64) -> Result<f64> {
    if !(d.is_finite() && d >= p.d0_m()) {
        return Err(Error::DistanceBelowReference {
            distance_m: d,
            d0_m: p.d0_m(),
        });
    }
    Ok(p.alpha_db() + 10.0 * p.beta() * (d / p.d0_m()).log10())
}

/// Floating-intercept loss minus the standing-wave gain in dB.
pub fn combined_path_loss(m: &ChannelModel, d: f64) -> Result<f64> {
    let pl = path_loss_sffl(&m.sffl, d)?;
    Ok(pl - m.standing.gain_db_at_offset(d - m.sffl.d0_m()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ComplexReflection;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn sffl(alpha: f64, beta: f64) -> SfflParams {
        SfflParams::new(alpha, beta, 0.0, 0.1).unwrap()
    }

    fn model(alpha: f64, beta: f64, mag: f64, phase: f64, k: f64) -> ChannelModel {
        ChannelModel::new(
            Frequency::new(140.0).unwrap(),
            sffl(alpha, beta),
            StandingWaveParams::new(ComplexReflection::new(mag, phase).unwrap(), k).unwrap(),
        )
    }

    #[test]
    fn floating_intercept_values() {
        assert_eq!(path_loss_sffl(&sffl(70.0, 2.0), 0.1).unwrap(), 70.0);
        assert!((path_loss_sffl(&sffl(70.0, 2.0), 1.0).unwrap() - 90.0).abs() < 1e-12);
        // 40-digit reference evaluation
        let v = path_loss_sffl(&sffl(63.4, 1.9), 0.4064).unwrap();
        assert!((v - 74.970_120_286_241_4).abs() < 1e-11);
    }

    #[test]
    fn below_reference_distance_errors() {
        let err = path_loss_sffl(&sffl(70.0, 2.0), 0.09).unwrap_err();
        assert!(matches!(err, Error::DistanceBelowReference { .. }));
        assert!(combined_path_loss(&model(70.0, 2.0, 0.1, 0.0, 5.0), 0.0).is_err());
    }

    #[test]
    fn combined_reference_value() {
        let m = model(70.0, 2.0, 0.08, PI / 4.0, 10.0 * PI);
        let v = combined_path_loss(&m, 0.3048).unwrap();
        assert!((v - 79.342_748_762_727_93).abs() < 1e-11);
    }

    #[test]
    fn envelope_identity_at_constructive_peak() {
        let m = model(70.0, 2.0, 0.3, 0.0, 10.0 * PI);
        // peaks where 2k(d - d0) is a multiple of 2π, i.e. every 0.1 m
        let d = 0.4;
        let plain = path_loss_sffl(&m.sffl, d).unwrap();
        let combined = combined_path_loss(&m, d).unwrap();
        assert!((plain - combined - 20.0 * 1.3f64.log10()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn zero_gamma_is_bit_identical(alpha in 20.0..120.0f64, beta in 0.5..4.0f64,
                                       k in 0.1..500.0f64, phase in 0.0..std::f64::consts::TAU,
                                       d in 0.1..10.0f64) {
            let m = model(alpha, beta, 0.0, phase, k);
            prop_assert_eq!(
                combined_path_loss(&m, d).unwrap().to_bits(),
                path_loss_sffl(&m.sffl, d).unwrap().to_bits()
            );
        }

        #[test]
        fn increasing_in_distance(beta in 0.01..4.0f64, d in 0.1..20.0f64, step in 1e-6..1.0f64) {
            let p = sffl(70.0, beta);
            prop_assert!(path_loss_sffl(&p, d + step).unwrap() > path_loss_sffl(&p, d).unwrap());
        }
    }
}
