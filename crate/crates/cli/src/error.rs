use std::io;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("numerical failure in {op}: {msg}")]
    Numerical { op: &'static str, msg: String },
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
    #[error("output error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Numerical { .. } => 3,
            CliError::ChecksFailed(_) => 1,
            CliError::Io(_) => 1,
        }
    }
}

impl From<geronimus_core::Error> for CliError {
    fn from(e: geronimus_core::Error) -> Self {
        if e.is_invalid_input() {
            CliError::Invalid(e.to_string())
        } else {
            CliError::Numerical {
                op: e.operation(),
                msg: e.to_string(),
            }
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

pub type CliResult<T> = Result<T, CliError>;
