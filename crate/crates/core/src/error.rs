use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge list contains no data lines")]
    EmptyInput,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unknown vertex id {0}")]
    UnknownVertex(u64),

    #[error("brute force refused: estimated work {work} exceeds cap {cap}")]
    WorkCapExceeded { work: f64, cap: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
