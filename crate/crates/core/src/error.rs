use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("value {0} is outside [0, 1]")]
    OutOfUnitInterval(f64),
    #[error("unknown kernel `{0}`")]
    UnknownKernel(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coordinate {k} out of range 1..={arity}")]
    CoordinateOutOfRange { k: usize, arity: usize },
    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: String, limit: String },
    #[error("function is not monotone")]
    NotMonotone,
    #[error("resolution {resolution} on axis {axis} does not divide 2^{bits}")]
    ResolutionNotDyadic { axis: usize, resolution: usize, bits: u32 },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, message: msg.into() }
    }
}
