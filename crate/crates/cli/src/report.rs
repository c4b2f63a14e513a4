//! The JSON report written by `fit` and read by `predict`.

use serde::Deserialize;
use swchan_core::{ChannelModel, ComplexReflection, Frequency, SfflParams, StandingWaveParams};
use swchan_fit::FitReport;

use crate::format::{fmt_g9, quantize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Flat record of a fitted model. Floats are held at the nine significant
/// digits they are written with, so `parse(write(r)) == r`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub frequency_ghz: f64,
    pub alpha_db: f64,
    pub beta: f64,
    pub sigma_db: f64,
    pub d0_m: f64,
    pub gamma_mag: f64,
    pub gamma_phase_rad: f64,
    pub k_rad_per_m: f64,
    pub rms_sffl_db: f64,
    pub rms_combined_db: f64,
    pub extrema_found: usize,
    pub refined: bool,
    pub tool_version: String,
}

impl ReportFile {
    pub fn from_fit(r: &FitReport) -> Self {
        let m = &r.model;
        Self {
            frequency_ghz: quantize(m.frequency.ghz()),
            alpha_db: quantize(m.sffl.alpha_db()),
            beta: quantize(m.sffl.beta()),
            sigma_db: quantize(m.sffl.sigma_db()),
            d0_m: quantize(m.sffl.d0_m()),
            gamma_mag: quantize(m.standing.gamma().magnitude()),
            gamma_phase_rad: quantize(m.standing.gamma().phase_rad()),
            k_rad_per_m: quantize(m.standing.k_rad_per_m()),
            rms_sffl_db: quantize(r.rms_sffl_db),
            rms_combined_db: quantize(r.rms_combined_db),
            extrema_found: r.extrema_found,
            refined: r.refined,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    /// Pretty JSON with a fixed key order and a trailing newline.
    pub fn to_json(&self) -> String {
        let floats = [
            ("frequency_ghz", self.frequency_ghz),
            ("alpha_db", self.alpha_db),
            ("beta", self.beta),
            ("sigma_db", self.sigma_db),
            ("d0_m", self.d0_m),
            ("gamma_mag", self.gamma_mag),
            ("gamma_phase_rad", self.gamma_phase_rad),
            ("k_rad_per_m", self.k_rad_per_m),
            ("rms_sffl_db", self.rms_sffl_db),
            ("rms_combined_db", self.rms_combined_db),
        ];
        let mut out = String::from("{\n");
        for (key, v) in floats {
            out += &format!("  \"{key}\": {},\n", fmt_g9(v));
        }
        out += &format!("  \"extrema_found\": {},\n", self.extrema_found);
        out += &format!("  \"refined\": {},\n", self.refined);
        out += &format!(
            "  \"tool_version\": {}\n}}\n",
            serde_json::Value::from(self.tool_version.as_str())
        );
        out
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn model(&self) -> swchan_core::Result<ChannelModel> {
        Ok(ChannelModel::new(
            Frequency::new(self.frequency_ghz)?,
            SfflParams::new(self.alpha_db, self.beta, self.sigma_db, self.d0_m)?,
            StandingWaveParams::new(
                ComplexReflection::new(self.gamma_mag, self.gamma_phase_rad)?,
                self.k_rad_per_m,
            )?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> ReportFile {
        ReportFile {
            frequency_ghz: 140.0,
            alpha_db: 70.0123457,
            beta: 1.99871234,
            sigma_db: 0.0971,
            d0_m: 0.1,
            gamma_mag: 0.0534,
            gamma_phase_rad: 0.5,
            k_rad_per_m: 31.4159265,
            rms_sffl_db: 0.31,
            rms_combined_db: 1.5e-8,
            extrema_found: 7,
            refined: true,
            tool_version: "0.1.0".into(),
        }
    }

    #[test]
    fn key_order_is_fixed() {
        let text = sample().to_json();
        let keys: Vec<&str> = text
            .lines()
            .filter_map(|l| l.trim().strip_prefix('"')?.split('"').next())
            .collect();
        assert_eq!(
            keys,
            [
                "frequency_ghz",
                "alpha_db",
                "beta",
                "sigma_db",
                "d0_m",
                "gamma_mag",
                "gamma_phase_rad",
                "k_rad_per_m",
                "rms_sffl_db",
                "rms_combined_db",
                "extrema_found",
                "refined",
                "tool_version"
            ]
        );
        assert!(text.contains("\"rms_combined_db\": 1.5e-08,"));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = sample().to_json().replace("\"beta\"", "\"slope\"");
        assert!(ReportFile::parse(&text).is_err());
    }

    #[test]
    fn model_rebuilds_from_fields() {
        let m = sample().model().unwrap();
        assert_eq!(m.sffl.alpha_db(), 70.0123457);
        assert_eq!(m.standing.k_rad_per_m(), 31.4159265);
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(
            f in 1.0..1000.0f64,
            a in -200.0..200.0f64,
            b in -5.0..5.0f64,
            s in 0.0..10.0f64,
            g in 0.0..0.99f64,
            ph in 0.0..std::f64::consts::TAU,
            k in 0.01..1e4f64,
            r1 in 0.0..10.0f64,
            r2 in 0.0..1e-6f64,
            n in 0usize..1000,
            refined in any::<bool>(),
        ) {
            let r = ReportFile {
                frequency_ghz: quantize(f),
                alpha_db: quantize(a),
                beta: quantize(b),
                sigma_db: quantize(s),
                d0_m: 0.1,
                gamma_mag: quantize(g),
                gamma_phase_rad: quantize(ph),
                k_rad_per_m: quantize(k),
                rms_sffl_db: quantize(r1),
                rms_combined_db: quantize(r2),
                extrema_found: n,
                refined,
                tool_version: TOOL_VERSION.into(),
            };
            prop_assert_eq!(ReportFile::parse(&r.to_json()).unwrap(), r);
        }
    }
}
