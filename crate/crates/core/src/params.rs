use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Reference distance used when none is given, in meters.
pub const DEFAULT_D0_M: f64 = 0.10;

/// Center frequency of a measurement band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frequency {
    center_ghz: f64,
}

impl Frequency {
    pub fn new(center_ghz: f64) -> Result<Self> {
        if !(center_ghz.is_finite() && center_ghz > 0.0) {
            return Err(Error::invalid("center_ghz", center_ghz, "must be positive"));
        }
        Ok(Self { center_ghz })
    }

    pub fn ghz(&self) -> f64 {
        self.center_ghz
    }
}

/// Floating-intercept model parameters.
///
/// `alpha_db` is the intercept at the reference distance `d0_m`, `beta` the
/// distance exponent and `sigma_db` the standard deviation of the zero-mean
/// shadow-fading term. Prediction never draws the fading term; only the
/// synthetic generator does.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SfflParams {
    alpha_db: f64,
    beta: f64,
    sigma_db: f64,
    d0_m: f64,
}

impl SfflParams {
    pub fn new(alpha_db: f64, beta: f64, sigma_db: f64, d0_m: f64) -> Result<Self> {
        if !alpha_db.is_finite() {
            return Err(Error::invalid("alpha_db", alpha_db, "must be finite"));
        }
        if !beta.is_finite() {
            return Err(Error::invalid("beta", beta, "must be finite"));
        }
        if !(sigma_db.is_finite() && sigma_db >= 0.0) {
            return Err(Error::invalid("sigma_db", sigma_db, "must be non-negative"));
        }
        if !(d0_m.is_finite() && d0_m > 0.0) {
            return Err(Error::invalid("d0_m", d0_m, "must be positive"));
        }
        Ok(Self {
            alpha_db,
            beta,
            sigma_db,
            d0_m,
        })
    }

    /// Parameters at the default 10 cm reference distance.
    pub fn with_default_d0(alpha_db: f64, beta: f64, sigma_db: f64) -> Result<Self> {
        Self::new(alpha_db, beta, sigma_db, DEFAULT_D0_M)
    }

    pub fn alpha_db(&self) -> f64 {
        self.alpha_db
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma_db(&self) -> f64 {
        self.sigma_db
    }

    pub fn d0_m(&self) -> f64 {
        self.d0_m
    }

    pub fn with_sigma(self, sigma_db: f64) -> Result<Self> {
        Self::new(self.alpha_db, self.beta, sigma_db, self.d0_m)
    }
}

/// Reflection coefficient of a passive termination, |G| < 1.
///
/// The phase is stored normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexReflection {
    magnitude: f64,
    phase_rad: f64,
}

impl ComplexReflection {
    pub fn new(magnitude: f64, phase_rad: f64) -> Result<Self> {
        if !(magnitude.is_finite() && (0.0..1.0).contains(&magnitude)) {
            return Err(Error::invalid(
                "gamma magnitude",
                magnitude,
                "must lie in [0, 1)",
            ));
        }
        if !phase_rad.is_finite() {
            return Err(Error::invalid("gamma phase", phase_rad, "must be finite"));
        }
        Ok(Self {
            magnitude,
            phase_rad: normalize_phase(phase_rad),
        })
    }

    /// Builds the coefficient from its real and imaginary parts.
    pub fn from_rect(re: f64, im: f64) -> Result<Self> {
        Self::new(re.hypot(im), im.atan2(re))
    }

    pub fn zero() -> Self {
        Self {
            magnitude: 0.0,
            phase_rad: 0.0,
        }
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn phase_rad(&self) -> f64 {
        self.phase_rad
    }

    pub fn re(&self) -> f64 {
        self.magnitude * self.phase_rad.cos()
    }

    pub fn im(&self) -> f64 {
        self.magnitude * self.phase_rad.sin()
    }
}

/// Wraps an angle into `[0, 2π)`.
pub(crate) fn normalize_phase(phase: f64) -> f64 {
    let wrapped = phase.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly 2π
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Reflection coefficient plus the effective wavenumber of the pattern.
///
/// The interference pattern repeats every `π / k` meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandingWaveParams {
    gamma: ComplexReflection,
    k_rad_per_m: f64,
}

impl StandingWaveParams {
    pub fn new(gamma: ComplexReflection, k_rad_per_m: f64) -> Result<Self> {
        if !(k_rad_per_m.is_finite() && k_rad_per_m > 0.0) {
            return Err(Error::invalid(
                "k_rad_per_m",
                k_rad_per_m,
                "must be positive",
            ));
        }
        Ok(Self { gamma, k_rad_per_m })
    }

    pub fn gamma(&self) -> ComplexReflection {
        self.gamma
    }

    pub fn k_rad_per_m(&self) -> f64 {
        self.k_rad_per_m
    }

    /// Spatial period of the pattern, `π / k`.
    pub fn period_m(&self) -> f64 {
        std::f64::consts::PI / self.k_rad_per_m
    }

    /// `|V|^2 / |A|^2` at `offset_m = d - d0`, without range checks.
    #[inline]
    pub fn magnitude_sq_at_offset(&self, offset_m: f64) -> f64 {
        let g = self.gamma.magnitude;
        let theta = 2.0 * self.k_rad_per_m * offset_m + self.gamma.phase_rad;
        1.0 + g * g + 2.0 * g * theta.cos()
    }

    /// Standing-wave gain in dB at `offset_m = d - d0`, without range checks.
    #[inline]
    pub fn gain_db_at_offset(&self, offset_m: f64) -> f64 {
        10.0 * self.magnitude_sq_at_offset(offset_m).log10()
    }
}
