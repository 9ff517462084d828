use thiserror::Error;

/// Errors raised by partition, lattice and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} appears in more than one block")]
    Overlap(u32),
    #[error("blocks do not cover an initial segment {{1..n}}: {0}")]
    Gap(String),
    #[error("cannot parse {input:?}: {reason}")]
    Syntax { input: String, reason: String },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("cut position {k} outside 0..={n}")]
    Range { k: usize, n: usize },
    #[error("block index {index} outside 1..={len}")]
    Index { index: usize, len: usize },
    #[error("{lower} is not finer than {upper}")]
    NotComparable { lower: String, upper: String },
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },
    #[error("operation {op} is not defined in the {basis} basis")]
    UnsupportedBasis { op: &'static str, basis: String },
    #[error("algebra mismatch: {left} vs {right}")]
    TagMismatch { left: String, right: String },
    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),
    #[error("alphabet of size {got} is too small, need at least {needed}")]
    AlphabetTooSmall { needed: usize, got: usize },
    #[error("element is not an idempotent: {0}")]
    NotIdempotent(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable error name, printed by the CLI on domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Overlap(_) => "OverlapError",
            Error::Gap(_) => "GapError",
            Error::Syntax { .. } => "SyntaxError",
            Error::SizeMismatch { .. } => "SizeMismatchError",
            Error::Range { .. } => "RangeError",
            Error::Index { .. } => "IndexError",
            Error::NotComparable { .. } => "NotComparableError",
            Error::BasisMismatch { .. } => "BasisMismatchError",
            Error::UnsupportedBasis { .. } => "UnsupportedBasisError",
            Error::TagMismatch { .. } => "TagMismatchError",
            Error::NotInvariant(_) => "NotInvariantError",
            Error::AlphabetTooSmall { .. } => "AlphabetTooSmallError",
            Error::NotIdempotent(_) => "NotIdempotentError",
            Error::Json(_) => "JsonError",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
