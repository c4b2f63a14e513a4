//! Horn antenna data and the link-budget prediction built on it.

use crate::error::{Error, Result};
use crate::model::{combined_path_loss, ChannelModel};

#[derive(Debug, Clone, PartialEq)]
pub struct AntennaSpec {
    band_name: String,
    band_low_ghz: f64,
    band_high_ghz: f64,
    half_power_beamwidth_deg: f64,
    gain_dbi: f64,
    beam_waist_radius_mm: f64,
}

// name, band low/high (GHz), HPBW (deg), gain (dBi), beam waist radius (mm)
const PRESETS: [(&str, f64, f64, f64, f64, f64); 3] = [
    ("WR-2.2", 325.0, 500.0, 12.0, 25.0, 1.3),
    ("WR-4.3", 170.0, 260.0, 13.0, 21.0, 2.7),
    ("WR-6.5", 110.0, 170.0, 13.0, 21.0, 4.1),
];

impl AntennaSpec {
    pub fn new(
        band_name: impl Into<String>,
        band_low_ghz: f64,
        band_high_ghz: f64,
        half_power_beamwidth_deg: f64,
        gain_dbi: f64,
        beam_waist_radius_mm: f64,
    ) -> Result<Self> {
        if !(band_low_ghz.is_finite() && band_low_ghz > 0.0) {
            return Err(Error::invalid(
                "band_low_ghz",
                band_low_ghz,
                "must be positive",
            ));
        }
        if !(band_high_ghz.is_finite() && band_high_ghz > band_low_ghz) {
            return Err(Error::invalid(
                "band_high_ghz",
                band_high_ghz,
                "must exceed band_low_ghz",
            ));
        }
        if !(half_power_beamwidth_deg.is_finite() && half_power_beamwidth_deg > 0.0) {
            return Err(Error::invalid(
                "half_power_beamwidth_deg",
                half_power_beamwidth_deg,
                "must be positive",
            ));
        }
        if !gain_dbi.is_finite() {
            return Err(Error::invalid("gain_dbi", gain_dbi, "must be finite"));
        }
        if !(beam_waist_radius_mm.is_finite() && beam_waist_radius_mm > 0.0) {
            return Err(Error::invalid(
                "beam_waist_radius_mm",
                beam_waist_radius_mm,
                "must be positive",
            ));
        }
        Ok(Self {
            band_name: band_name.into(),
            band_low_ghz,
            band_high_ghz,
            half_power_beamwidth_deg,
            gain_dbi,
            beam_waist_radius_mm,
        })
    }

    /// Built-in horn presets: `WR-2.2`, `WR-4.3` and `WR-6.5`.
    /// Lookup ignores ASCII case.
    pub fn preset(name: &str) -> Option<Self> {
        PRESETS
            .iter()
            .find(|p| p.0.eq_ignore_ascii_case(name))
            .map(|&(n, lo, hi, bw, g, w)| Self {
                band_name: n.to_string(),
                band_low_ghz: lo,
                band_high_ghz: hi,
                half_power_beamwidth_deg: bw,
                gain_dbi: g,
                beam_waist_radius_mm: w,
            })
    }

    pub fn presets() -> Vec<Self> {
        PRESETS.iter().filter_map(|p| Self::preset(p.0)).collect()
    }

    pub fn band_name(&self) -> &str {
        &self.band_name
    }

    pub fn band_low_ghz(&self) -> f64 {
        self.band_low_ghz
    }

    pub fn band_high_ghz(&self) -> f64 {
        self.band_high_ghz
    }

    pub fn half_power_beamwidth_deg(&self) -> f64 {
        self.half_power_beamwidth_deg
    }

    pub fn gain_dbi(&self) -> f64 {
        self.gain_dbi
    }

    pub fn beam_waist_radius_mm(&self) -> f64 {
        self.beam_waist_radius_mm
    }

    /// True when `frequency_ghz` lies inside the band, edges included.
    pub fn covers(&self, frequency_ghz: f64) -> bool {
        (self.band_low_ghz..=self.band_high_ghz).contains(&frequency_ghz)
    }

    pub fn check_band(&self, frequency_ghz: f64) -> Result<()> {
        if self.covers(frequency_ghz) {
            Ok(())
        } else {
            Err(Error::BandMismatch {
                antenna: self.band_name.clone(),
                frequency_ghz,
                low_ghz: self.band_low_ghz,
                high_ghz: self.band_high_ghz,
            })
        }
    }
}

/// Received power in dBm: `P_tx + G_tx + G_rx - PL(d)`, with `PL` the
/// combined model.
pub fn predicted_received_power(
    m: &ChannelModel,
    tx_power_dbm: f64,
    tx: &AntennaSpec,
    rx: &AntennaSpec,
    d: f64,
) -> Result<f64> {
    let f = m.frequency.ghz();
    tx.check_band(f)?;
    rx.check_band(f)?;
    let pl = combined_path_loss(m, d)?;
    Ok(tx_power_dbm + tx.gain_dbi + rx.gain_dbi - pl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{ComplexReflection, Frequency, SfflParams, StandingWaveParams};
    use std::f64::consts::PI;

    fn model(freq: f64, mag: f64) -> ChannelModel {
        ChannelModel::new(
            Frequency::new(freq).unwrap(),
            SfflParams::new(70.0, 2.0, 0.0, 0.1).unwrap(),
            StandingWaveParams::new(ComplexReflection::new(mag, PI / 4.0).unwrap(), 10.0 * PI)
                .unwrap(),
        )
    }

    #[test]
    fn presets_match_datasheet() {
        let wr65 = AntennaSpec::preset("WR-6.5").unwrap();
        assert_eq!(wr65.gain_dbi(), 21.0);
        assert_eq!(wr65.half_power_beamwidth_deg(), 13.0);
        assert_eq!((wr65.band_low_ghz(), wr65.band_high_ghz()), (110.0, 170.0));
        assert_eq!(wr65.beam_waist_radius_mm(), 4.1);
        let wr22 = AntennaSpec::preset("wr-2.2").unwrap();
        assert_eq!(wr22.gain_dbi(), 25.0);
        assert_eq!((wr22.band_low_ghz(), wr22.band_high_ghz()), (325.0, 500.0));
        assert_eq!(
            AntennaSpec::preset("WR-4.3")
                .unwrap()
                .beam_waist_radius_mm(),
            2.7
        );
        assert!(AntennaSpec::preset("WR-10").is_none());
        assert_eq!(AntennaSpec::presets().len(), 3);
    }

    #[test]
    fn every_campaign_frequency_has_a_preset() {
        for f in [140.0, 220.0, 340.0, 410.0, 460.0] {
            assert_eq!(
                AntennaSpec::presets()
                    .iter()
                    .filter(|a| a.covers(f))
                    .count(),
                1
            );
        }
    }

    #[test]
    fn additive_link_budget() {
        // PL at 1 m is exactly 90 dB with no reflection
        let m = model(140.0, 0.0);
        let wr65 = AntennaSpec::preset("WR-6.5").unwrap();
        let p = predicted_received_power(&m, 5.0, &wr65, &wr65, 1.0).unwrap();
        assert!((p + 43.0).abs() < 1e-12);
    }

    #[test]
    fn band_mismatch_names_antenna() {
        let m = model(140.0, 0.0);
        let wr65 = AntennaSpec::preset("WR-6.5").unwrap();
        let wr22 = AntennaSpec::preset("WR-2.2").unwrap();
        let err = predicted_received_power(&m, 5.0, &wr65, &wr22, 0.5).unwrap_err();
        match err {
            Error::BandMismatch { antenna, .. } => assert_eq!(antenna, "WR-2.2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn composed_with_reflection() {
        // 5 + 21 + 21 - PL_combined(0.3048); PL from the 40-digit reference
        let m = model(140.0, 0.08);
        let wr65 = AntennaSpec::preset("WR-6.5").unwrap();
        let p = predicted_received_power(&m, 5.0, &wr65, &wr65, 0.3048).unwrap();
        assert!((p + 32.342_748_762_727_93).abs() < 1e-11);
    }

    #[test]
    fn rejects_inverted_band() {
        assert!(AntennaSpec::new("x", 200.0, 100.0, 10.0, 20.0, 1.0).is_err());
    }
}
