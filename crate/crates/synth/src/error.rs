use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid distance grid: {0}")]
    InvalidGrid(String),

    #[error("invalid synthesis setting: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Model(#[from] swchan_core::Error),
}
