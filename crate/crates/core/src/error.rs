use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("elements {0} and {1} are comparable in the product order")]
    ComparablePair(usize, usize),

    #[error("enumeration of {needed} elements exceeds the limit of {limit}")]
    EnumerationLimit { needed: String, limit: usize },

    #[error("value of {context} exceeds the {cap_bits}-bit limit")]
    ValueExceedsLimit { context: String, cap_bits: u64 },

    #[error("step budget of {budget} exhausted while computing {context}")]
    BudgetExceeded { context: String, budget: u64 },

    #[error("the d-binomial representation of 0 is undefined")]
    ZeroRepresentation,

    #[error("segment of size {a} requested from a slice of size {slice}")]
    SegmentTooLarge { a: String, slice: String },

    #[error("no admissible degree for a = {a} in dimension {m}")]
    NoAdmissibleDegree { a: String, m: usize },

    #[error("element {index} has degree {degree}, above the kernel length {r}")]
    DegreeExceedsLength { index: usize, degree: u64, r: u64 },

    #[error("growth function is not monotone at position {0}")]
    NotMonotone(usize),

    #[error("growth table has no value at position {0}")]
    GrowthOutOfRange(String),

    #[error("terminal element: no successor exists")]
    Terminal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn exceeds(context: impl Into<String>, cap_bits: u64) -> Self {
        Error::ValueExceedsLimit { context: context.into(), cap_bits }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
