use prealt_core::Error as CoreError;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid file: {0}")]
    Format(String),
    #[error("missing section: {0}")]
    MissingSection(&'static str),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// 2 for unusable input, 1 when the mathematics says no.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                CoreError::InvalidField(_)
                | CoreError::DimensionMismatch(_)
                | CoreError::Parse(_)
                | CoreError::Slot(_)
                | CoreError::UnknownName(_)
                | CoreError::Unsupported(_)
                | CoreError::SearchSpaceTooLarge { .. } => 2,
                _ => 1,
            },
            _ => 2,
        }
    }
}
