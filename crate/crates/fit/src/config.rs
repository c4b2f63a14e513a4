use serde::Deserialize;

/// Grid densities, bounds and tolerances of the fitting pipeline.
///
/// Deserializes from a partial JSON object; missing keys keep their
/// defaults.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FitConfig {
    /// Upper bound of the `|Γ|` search.
    pub gamma_max: f64,
    /// `|Γ|` grid points over `[0, gamma_max]`.
    pub gamma_steps: usize,
    /// Phase grid points over `[0, 2π)`; also used for the initial phase.
    pub phase_steps: usize,
    /// `k` grid points over `(0, π / Δd_min]`.
    pub k_steps: usize,
    /// Local search stops after this many iterations...
    pub max_iterations: usize,
    /// ...or once an iteration improves the RMS by less than this (dB).
    pub improvement_tol_db: f64,
    /// `|Γ|` used when no maximum/minimum pair is found.
    pub fallback_gamma: f64,
    /// Number of coarse-grid basins refined, in addition to the initial
    /// estimate.
    pub refine_starts: usize,
    /// RMS values closer than this (dB) count as ties.
    pub rms_tie_tol_db: f64,
    /// `|Γ|` values closer than this count as ties.
    pub gamma_tie_tol: f64,
    /// Allowed increase of the residual sum of squares, in units of the
    /// residual variance, when shrinking `|Γ|` toward the smallest value the
    /// data support. Zero keeps the least-squares solution.
    pub parsimony_deviance: f64,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            gamma_max: 0.99,
            gamma_steps: 50,
            phase_steps: 64,
            k_steps: 200,
            max_iterations: 500,
            improvement_tol_db: 1e-6,
            fallback_gamma: 0.05,
            refine_starts: 4,
            rms_tie_tol_db: 1e-9,
            gamma_tie_tol: 1e-4,
            parsimony_deviance: 1.0,
        }
    }
}

impl FitConfig {
    pub(crate) fn gamma_grid_step(&self) -> f64 {
        self.gamma_max / (self.gamma_steps.max(2) - 1) as f64
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.gamma_max > 0.0 && self.gamma_max < 1.0) {
            return Err(format!("gamma_max = {} must lie in (0, 1)", self.gamma_max));
        }
        if self.gamma_steps < 2 || self.phase_steps < 1 || self.k_steps < 1 {
            return Err("grid step counts must be positive (gamma_steps >= 2)".into());
        }
        if !(self.fallback_gamma >= 0.0 && self.fallback_gamma <= self.gamma_max) {
            return Err(format!(
                "fallback_gamma = {} must lie in [0, gamma_max]",
                self.fallback_gamma
            ));
        }
        for (name, v) in [
            ("improvement_tol_db", self.improvement_tol_db),
            ("rms_tie_tol_db", self.rms_tie_tol_db),
            ("gamma_tie_tol", self.gamma_tie_tol),
            ("parsimony_deviance", self.parsimony_deviance),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(format!("{name} = {v} must be non-negative"));
            }
        }
        Ok(())
    }
}
