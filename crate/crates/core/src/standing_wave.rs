//! Standing-wave ratio relations and the normalized standing-wave term.

use crate::error::{Error, Result};
use crate::params::{ComplexReflection, StandingWaveParams};

fn check_distance(d: f64, d0: f64) -> Result<()> {
    if d.is_finite() && d >= d0 {
        Ok(())
    } else {
        Err(Error::DistanceBelowReference {
            distance_m: d,
            d0_m: d0,
        })
    }
}

/// `|V_net|^2 / |A|^2 = 1 + |G|^2 + 2|G| cos(2k(d - d0) + phase)`.
///
/// The result always lies in `[(1 - |G|)^2, (1 + |G|)^2]`.
pub fn standing_wave_magnitude_sq(s: &StandingWaveParams, d: f64, d0: f64) -> Result<f64> {
    check_distance(d, d0)?;
    Ok(s.magnitude_sq_at_offset(d - d0))
}

/// Standing-wave power gain in dB (factor 10). Positive where the reflected
/// wave adds constructively.
pub fn standing_wave_gain_db(s: &StandingWaveParams, d: f64, d0: f64) -> Result<f64> {
    check_distance(d, d0)?;
    Ok(s.gain_db_at_offset(d - d0))
}

/// `SWR = (1 + |G|) / (1 - |G|)`.
pub fn swr_of_gamma(g: &ComplexReflection) -> f64 {
    (1.0 + g.magnitude()) / (1.0 - g.magnitude())
}

/// `|G| = (Vmax - Vmin) / (Vmax + Vmin)` from linear voltage extrema.
pub fn gamma_mag_from_extrema(v_max: f64, v_min: f64) -> Result<f64> {
    if !(v_min.is_finite() && v_max.is_finite() && v_min > 0.0 && v_max >= v_min) {
        return Err(Error::InvalidExtrema { v_max, v_min });
    }
    Ok((v_max - v_min) / (v_max + v_min))
}
