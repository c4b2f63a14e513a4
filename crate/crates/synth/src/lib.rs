//! Synthetic measurement campaigns for the standing-wave channel model.
//!
//! Samples follow the combined model plus independent zero-mean Gaussian
//! shadow fading. Noise comes from a pinned generator ([`SplitMix64`]) and a
//! pinned Box-Muller transform, so a seed reproduces the same campaign in any
//! language.
//!
//! [`oracle_standing_wave`] evaluates the forward and reflected waves with
//! explicit complex exponentials. It shares no code with the closed-form
//! expression in `swchan-core` and is used to check it.

mod error;
mod generator;
mod oracle;
mod rng;

pub use error::{Error, Result};
pub use generator::{generate_measurements, DistanceGrid, SynthConfig};
pub use oracle::oracle_standing_wave;
pub use rng::SplitMix64;

/// Complex type of the oracle's signature.
pub use num_complex::Complex64;
