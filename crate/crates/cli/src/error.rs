use thiserror::Error;

/// Failure of a command, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or values; exit code 1.
    #[error("{0}")]
    Usage(String),
    /// Unreadable, malformed or unusable input data; exit code 2.
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub(crate) fn data(msg: impl Into<String>) -> CliError {
    CliError::Data(msg.into())
}

pub(crate) fn io_error(path: &str, e: std::io::Error) -> CliError {
    CliError::Data(format!("{path}: {e}"))
}
