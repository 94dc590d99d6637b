use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(invq_core::Error),
    #[error("{0}")]
    Runtime(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl From<invq_core::Error> for CliError {
    fn from(e: invq_core::Error) -> Self {
        match e {
            invq_core::Error::Precondition(m) => CliError::Usage(m),
            other => CliError::Core(other),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
