use swchan_core::{ChannelModel, StandingWaveParams};

/// Fitted model plus fit diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    /// `sigma_db` of the line is the RMS misfit of the combined model.
    pub model: ChannelModel,
    /// RMS misfit of the plain floating-intercept line (dB).
    pub rms_sffl_db: f64,
    /// RMS misfit of the combined model (dB). Never exceeds `rms_sffl_db`.
    pub rms_combined_db: f64,
    /// Standing-wave parameters the refinement started from.
    pub initial_estimate: StandingWaveParams,
    /// Whether the refinement moved away from `initial_estimate`.
    pub refined: bool,
    /// Local-search sweeps, summed over all starts.
    pub iterations: usize,
    /// Residual maxima plus minima.
    pub extrema_found: usize,
    /// `|Γ|` started from the configured fallback.
    pub gamma_fallback: bool,
    /// `k` came from the grid rather than from the extrema spacing.
    pub k_fallback: bool,
}
