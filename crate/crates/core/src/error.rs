use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The evidence has zero probability (or zero count), so conditioning on it is undefined.
    #[error("degenerate evidence: the evidence has zero probability, posterior is undefined")]
    DegenerateEvidence,

    #[error("value {value} is outside the unit interval [0, 1]")]
    OutOfRange { value: String },

    #[error("no population up to {cap} yields integral tree counts")]
    NotFound { cap: u64 },

    #[error("population {population} does not apportion into integral counts")]
    NonIntegralCounts { population: u64 },

    #[error("no sample out of {samples} satisfied the evidence")]
    NoConditionedSamples { samples: u64 },

    #[error("sweep grid is empty")]
    EmptyGrid,

    #[error("sweep grid is not strictly increasing at position {index}")]
    UnorderedGrid { index: usize },

    #[error("missing required key `{key}`")]
    MissingKey { key: String },

    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { key: String, line: usize },

    #[error("line {line}: {message}")]
    RangeError { line: usize, message: String },

    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },

    #[error("{0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegenerateEvidence | Error::NoConditionedSamples { .. } => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
