use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown algebra family `{0}`")]
    UnknownFamily(String),

    #[error("`{param}` is not a parameter of the {family} family")]
    IllegalOverride { family: String, param: String },

    #[error("unbound parameter `{0}`")]
    Unbound(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// L^2 = 0, M^2 = 0 and H^2 = 0 are type-transition loci, not algebras.
    #[error("boundary surface: {0} (passing through this value alters the algebra type)")]
    Boundary(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("degenerate point: {0}")]
    Degenerate(String),

    #[error("inconsistent configuration: {0}")]
    Inconsistent(String),

    #[error("value is not real: {0}")]
    NotReal(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("classification mismatch at {point}: predicted {predicted}, expected inertia {expected:?}, found {found:?}")]
    ClassificationMismatch {
        point: String,
        predicted: String,
        expected: Option<(usize, usize, usize)>,
        found: (usize, usize, usize),
    },

    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Document(e.to_string())
    }
}
