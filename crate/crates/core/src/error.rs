use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distance {distance_m} m is below the reference distance {d0_m} m")]
    DistanceBelowReference { distance_m: f64, d0_m: f64 },

    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("insufficient samples: need at least 3, found {found}")]
    TooFewSamples { found: usize },

    #[error("distances must be strictly increasing (sample {index})")]
    UnsortedDistances { index: usize },

    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },

    #[error("invalid standing-wave extrema: v_max = {v_max}, v_min = {v_min}")]
    InvalidExtrema { v_max: f64, v_min: f64 },

    #[error(
        "antenna {antenna} covers {low_ghz}-{high_ghz} GHz, model frequency is {frequency_ghz} GHz"
    )]
    BandMismatch {
        antenna: String,
        frequency_ghz: f64,
        low_ghz: f64,
        high_ghz: f64,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }
}
