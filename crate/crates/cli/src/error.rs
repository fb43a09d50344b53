use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("solver error: {0}")]
    Solver(annuli::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Solver(_) | CliError::Other(_) => 1,
        }
    }
}

impl From<annuli::Error> for CliError {
    fn from(e: annuli::Error) -> Self {
        use annuli::Error::*;
        match e {
            EmptyInput | TooFewPoints { .. } | NonFinite { .. } | SizeGuard { .. } => CliError::Input(e.to_string()),
            other => CliError::Solver(other),
        }
    }
}
