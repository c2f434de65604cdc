use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Unreadable or malformed input: exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// The analysis itself failed: exit code 1.
    #[error("analysis error: {0}")]
    Analysis(#[from] mhproj::Error),
    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Analysis(_) | CliError::Output { .. } => 1,
        }
    }
}
