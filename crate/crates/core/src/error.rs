use thiserror::Error;

/// Coarse classification used by front-ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input text.
    Parse,
    /// The mathematics refuses: invariance, non-isolated zeros, unsupported shapes.
    Domain,
    /// A computation exceeded its configured budget.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: expected ({expected}), found ({found})")]
    RingMismatch { expected: String, found: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable index {index} out of range for a ring of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("inconclusive truncation: pullback vanishes up to order {0}")]
    InconclusiveTruncation(u32),
    #[error("resource limit exceeded: more than {0} reduction steps")]
    ResourceLimit(usize),
    #[error("the hypersurface is invariant by the 1-form")]
    InvariantHypersurface,
    #[error("non-isolated: {0} is infinite")]
    NonIsolated(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("vector field #{0} is not tangent to the hypersurface")]
    GeneratorNotTangent(usize),
    #[error("irrational point: {0}")]
    IrrationalPoint(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("the 1-form is identically zero")]
    ZeroForm,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::InvalidRing(_) => {
                ErrorKind::Parse
            }
            Error::ResourceLimit(_) | Error::InconclusiveTruncation(_) => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
