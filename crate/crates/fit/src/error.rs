use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("too few points: need at least {needed}, found {found}")]
    TooFewPoints { needed: usize, found: usize },

    #[error("insufficient extrema: need two, found {found}")]
    InsufficientExtrema { found: usize },

    #[error("invalid fit configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Model(#[from] swchan_core::Error),
}
