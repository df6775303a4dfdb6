use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid or missing arguments.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Compute(#[from] grover_ent::Error),

    #[error("{0}")]
    Invariant(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serialize(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Serialize(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Serialize(e.to_string())
    }
}
