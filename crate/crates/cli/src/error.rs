use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),

    #[error("invalid job document: {0}")]
    Document(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("{context}: {source}")]
    Core { context: String, source: kstab::Error },
}

impl CliError {
    /// 1 I/O, 2 validation, 3 uncertified fit, 4 internal cross-check failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Document(_) | CliError::Usage(_) => 2,
            CliError::Core { source, .. } => match source {
                kstab::Error::CrossCheck(_) => 4,
                kstab::Error::UncertifiedFit
                | kstab::Error::NotYetPolynomial(_)
                | kstab::Error::WindowTooShort { .. }
                | kstab::Error::ApproximationUnstable { .. } => 3,
                _ => 2,
            },
        }
    }
}
