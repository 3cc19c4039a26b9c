use rodrigues::RotationError;
use thiserror::Error;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_HALF_TURN: u8 = 3;
pub const EXIT_PARALLEL_AXES: u8 = 4;
pub const EXIT_NON_MONOTONIC: u8 = 5;
pub const EXIT_STEP_TOO_LARGE: u8 = 6;
pub const EXIT_IO: u8 = 7;

/// An error message paired with the process exit code it maps to.
#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(EXIT_PARSE, message)
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self::new(EXIT_IO, message)
    }
}

impl From<RotationError> for CliError {
    fn from(e: RotationError) -> Self {
        let code = match e {
            RotationError::HalfTurnUndefined => EXIT_HALF_TURN,
            RotationError::ParallelAxes => EXIT_PARALLEL_AXES,
            RotationError::NonMonotonicTime { .. } => EXIT_NON_MONOTONIC,
            RotationError::StepTooLarge { .. } => EXIT_STEP_TOO_LARGE,
            _ => EXIT_PARSE,
        };
        let message = match e {
            RotationError::HalfTurnUndefined => {
                "Rodrigues vector undefined at angle pi (half-turn); use --to mat, aa or half"
                    .to_string()
            }
            other => other.to_string(),
        };
        Self::new(code, message)
    }
}
