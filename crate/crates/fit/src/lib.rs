//! Fitting pipeline for the standing-wave channel model.
//!
//! 1. Ordinary least squares for the floating-intercept line.
//! 2. Residuals `fit - measured`, so constructive interference is positive.
//! 3. Local extrema of the residuals; the spacing of consecutive maxima gives
//!    the pattern period `π / k`, and the largest maximum and smallest
//!    minimum give `|Γ|` through the SWR relation.
//! 4. A phase grid at the initial `(|Γ|, k)`.
//! 5. Refinement: a coarse grid over `(|Γ|, phase, k)` seeds a
//!    derivative-free local search. The intercept and slope are re-solved in
//!    closed form for every candidate.
//!
//! [`fit_channel`] runs all of it.

mod config;
mod error;
mod estimate;
mod objective;
mod ols;
mod pipeline;
mod powell;
mod refine;
mod report;
mod residuals;

pub use config::FitConfig;
pub use error::{Error, Result};
pub use estimate::{estimate_k_from_period, initial_gamma_estimate, k_grid_estimate, InitialGamma};
pub use ols::fit_sffl_ols;
pub use pipeline::fit_channel;
pub use powell::{powell_minimize, PowellOutcome};
pub use refine::refine_fit;
pub use report::FitReport;
pub use residuals::{detect_extrema, residuals, Extrema, Extremum, ResidualSeries};

pub use swchan_core::{MeasurementSet, Sample};
