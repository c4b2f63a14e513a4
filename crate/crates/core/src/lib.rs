//! Closed-form channel model for short-range line-of-sight terahertz links.
//!
//! Path loss follows the single-frequency floating-intercept model
//!
//! ```text
//! PL(d) = alpha + 10 * beta * log10(d / d0),   d >= d0
//! ```
//!
//! corrected by the standing wave that forms between the transmit and
//! receive horns. With the forward amplitude normalized to one, the
//! standing-wave power ratio is
//!
//! ```text
//! |V(d)|^2 = 1 + |G|^2 + 2 |G| cos(2 k (d - d0) + phase(G))
//! ```
//!
//! and its dB value is subtracted from the floating-intercept loss.
//!
//! Units are fixed across the crate: meters, GHz, dB/dBm and radians.

mod antenna;
mod error;
mod measurement;
mod model;
mod params;
mod standing_wave;

pub mod db;

pub use antenna::{predicted_received_power, AntennaSpec};
pub use error::{Error, Result};
pub use measurement::{MeasurementSet, Sample, MIN_SAMPLES};
pub use model::{combined_path_loss, path_loss_sffl, ChannelModel};
pub use params::{ComplexReflection, Frequency, SfflParams, StandingWaveParams, DEFAULT_D0_M};
pub use standing_wave::{
    gamma_mag_from_extrema, standing_wave_gain_db, standing_wave_magnitude_sq, swr_of_gamma,
};
