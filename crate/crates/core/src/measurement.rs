use crate::error::{Error, Result};
use crate::params::Frequency;

pub const MIN_SAMPLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub distance_m: f64,
    pub path_loss_db: f64,
}

impl Sample {
    pub fn new(distance_m: f64, path_loss_db: f64) -> Self {
        Self {
            distance_m,
            path_loss_db,
        }
    }
}

/// Distance-swept path-loss samples at one center frequency.
///
/// Invariants: at least three samples, distances strictly increasing and
/// not below `d0_m`, every value finite.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSet {
    frequency: Frequency,
    samples: Vec<Sample>,
    d0_m: f64,
}

impl MeasurementSet {
    pub fn new(frequency: Frequency, samples: Vec<Sample>, d0_m: f64) -> Result<Self> {
        if !(d0_m.is_finite() && d0_m > 0.0) {
            return Err(Error::invalid("d0_m", d0_m, "must be positive"));
        }
        if samples.len() < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                found: samples.len(),
            });
        }
        for (i, s) in samples.iter().enumerate() {
            if !(s.distance_m.is_finite() && s.path_loss_db.is_finite()) {
                return Err(Error::NonFiniteSample { index: i });
            }
            if s.distance_m < d0_m {
                return Err(Error::DistanceBelowReference {
                    distance_m: s.distance_m,
                    d0_m,
                });
            }
            if i > 0 && s.distance_m <= samples[i - 1].distance_m {
                return Err(Error::UnsortedDistances { index: i });
            }
        }
        Ok(Self {
            frequency,
            samples,
            d0_m,
        })
    }

    pub fn frequency(&self) -> Frequency {
        self.frequency
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn d0_m(&self) -> f64 {
        self.d0_m
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn distances(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.distance_m)
    }

    pub fn path_losses(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.path_loss_db)
    }

    /// Smallest spacing between neighbouring distances.
    pub fn min_step_m(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| w[1].distance_m - w[0].distance_m)
            .fold(f64::INFINITY, f64::min)
    }

    /// Copy of the set with every path loss shifted by `offset_db`.
    pub fn shifted(&self, offset_db: f64) -> Self {
        let samples = self
            .samples
            .iter()
            .map(|s| Sample::new(s.distance_m, s.path_loss_db + offset_db))
            .collect();
        Self {
            frequency: self.frequency,
            samples,
            d0_m: self.d0_m,
        }
    }
}
