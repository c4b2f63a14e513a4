use num_complex::Complex64;
use swchan_core::{combined_path_loss, ChannelModel, MeasurementSet, Sample};

use crate::error::{Error, Result};
use crate::oracle::oracle_standing_wave;
use crate::rng::SplitMix64;

/// Measurement distances, either listed or as an inclusive arithmetic grid.
#[derive(Debug, Clone, PartialEq)]
pub enum DistanceGrid {
    Explicit(Vec<f64>),
    Range {
        start_m: f64,
        stop_m: f64,
        step_m: f64,
    },
}

impl DistanceGrid {
    /// 10.16 cm to 81.28 cm in 5.08 cm steps (15 distances).
    pub fn bench() -> Self {
        DistanceGrid::Range {
            start_m: 0.1016,
            stop_m: 0.8128,
            step_m: 0.0508,
        }
    }

    /// Expands the grid. Range points are `start + i * step` for every `i`
    /// that does not overshoot `stop` by more than a relative 1e-9 of a step.
    pub fn distances(&self) -> Result<Vec<f64>> {
        match *self {
            DistanceGrid::Explicit(ref d) => Ok(d.clone()),
            DistanceGrid::Range {
                start_m,
                stop_m,
                step_m,
            } => {
                if !(start_m.is_finite() && stop_m.is_finite() && step_m.is_finite()) {
                    return Err(Error::InvalidGrid("non-finite bound".into()));
                }
                if step_m <= 0.0 {
                    return Err(Error::InvalidGrid(format!(
                        "step {step_m} must be positive"
                    )));
                }
                if stop_m < start_m {
                    return Err(Error::InvalidGrid(format!(
                        "stop {stop_m} is below start {start_m}"
                    )));
                }
                let intervals = ((stop_m - start_m) / step_m + 1e-9).floor() as usize;
                Ok((0..=intervals)
                    .map(|i| start_m + i as f64 * step_m)
                    .collect())
            }
        }
    }
}

/// Settings for one synthetic campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub model: ChannelModel,
    pub grid: DistanceGrid,
    pub sigma_db: f64,
    pub seed: u64,
    /// Forward-wave amplitude `A`. Path loss does not depend on it; it
    /// scales [`SynthConfig::voltage_trace`].
    pub forward_amplitude: f64,
}

impl SynthConfig {
    /// Noise-free campaign on the bench grid with unit forward amplitude.
    pub fn new(model: ChannelModel) -> Self {
        Self {
            model,
            grid: DistanceGrid::bench(),
            sigma_db: 0.0,
            seed: 0,
            forward_amplitude: 1.0,
        }
    }

    pub fn with_grid(mut self, grid: DistanceGrid) -> Self {
        self.grid = grid;
        self
    }

    pub fn with_noise(mut self, sigma_db: f64, seed: u64) -> Self {
        self.sigma_db = sigma_db;
        self.seed = seed;
        self
    }

    fn validate(&self) -> Result<Vec<f64>> {
        if !(self.sigma_db.is_finite() && self.sigma_db >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "sigma_db = {} must be non-negative",
                self.sigma_db
            )));
        }
        if !(self.forward_amplitude.is_finite() && self.forward_amplitude > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "forward amplitude {} must be positive",
                self.forward_amplitude
            )));
        }
        let distances = self.grid.distances()?;
        if distances.len() < swchan_core::MIN_SAMPLES {
            return Err(Error::InvalidGrid(format!(
                "{} distances, need at least {}",
                distances.len(),
                swchan_core::MIN_SAMPLES
            )));
        }
        let d0 = self.model.sffl.d0_m();
        if let Some(d) = distances.iter().find(|&&d| d.is_nan() || d < d0) {
            return Err(Error::InvalidGrid(format!(
                "distance {d} m is below the reference distance {d0} m"
            )));
        }
        Ok(distances)
    }

    /// Net received voltage at each grid distance from the complex oracle.
    pub fn voltage_trace(&self) -> Result<Vec<(f64, Complex64)>> {
        let distances = self.validate()?;
        let s = &self.model.standing;
        let a = Complex64::new(self.forward_amplitude, 0.0);
        Ok(distances
            .into_iter()
            .map(|d| {
                let (v, _) =
                    oracle_standing_wave(&s.gamma(), s.k_rad_per_m(), d, self.model.sffl.d0_m(), a);
                (d, v)
            })
            .collect())
    }
}

/// Draws one campaign: `PL_i = combined_path_loss(d_i) + sigma * z_i`.
///
/// The `z_i` are consumed from `SplitMix64::new(seed)` in distance order. No
/// draws are made when `sigma_db` is zero.
pub fn generate_measurements(c: &SynthConfig) -> Result<MeasurementSet> {
    let distances = c.validate()?;
    let mut rng = SplitMix64::new(c.seed);
    let mut samples = Vec::with_capacity(distances.len());
    for d in distances {
        let mut pl = combined_path_loss(&c.model, d)?;
        if c.sigma_db > 0.0 {
            pl += c.sigma_db * rng.next_gaussian();
        }
        samples.push(Sample::new(d, pl));
    }
    Ok(MeasurementSet::new(
        c.model.frequency,
        samples,
        c.model.sffl.d0_m(),
    )?)
}
