use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] nichols_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;
pub const EXIT_CAP_EXCEEDED: u8 = 4;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use nichols_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(E::CapExceeded { .. }) => EXIT_CAP_EXCEEDED,
            CliError::Core(
                E::ZeroParameter(_)
                | E::LengthMismatch { .. }
                | E::InvalidWord(_)
                | E::InvalidLiteral { .. }
                | E::OutOfRange(_),
            ) => EXIT_USAGE,
            CliError::Core(_) | CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => {
                EXIT_INTERNAL
            }
        }
    }
}
