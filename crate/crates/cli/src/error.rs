use thiserror::Error;

/// Failure of a subcommand, carrying the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Disconnected => 4,
        }
    }
}

impl From<wiener_core::Error> for CliError {
    fn from(e: wiener_core::Error) -> Self {
        use wiener_core::Error as E;
        match e {
            E::Disconnected => CliError::Disconnected,
            E::NotATree
            | E::NotBipartite
            | E::ClassRemovalNotTwoComponents { .. }
            | E::NotPartialCube(_) => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
