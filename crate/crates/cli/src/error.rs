use std::process::ExitCode;

use chrw_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        let code = match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::InvalidParams(_) | Error::SeriesTooShort { .. } => 2,
                Error::Domain(_) | Error::NonConvergence { .. } | Error::NoMinimum { .. } => 3,
                Error::StepUnderflow { .. } | Error::ToleranceUnachievable(_) => 4,
            },
            CliError::Io(_) => 1,
        };
        ExitCode::from(code)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}
