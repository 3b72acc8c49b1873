use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of matrices, cochains or structure constants do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    Index(String),
    /// Malformed or incomplete input (files, missing structure, bad options).
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed input that fails a mathematical precondition (not a cocycle, not Rota-Baxter, ...).
    #[error("rejected: {0}")]
    Rejected(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by the mathematics of the input rather than its form.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Rejected(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
