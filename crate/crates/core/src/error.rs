use thiserror::Error;

/// Every failure the toolkit can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of multiplicative order {0} exists in this field")]
    NoSuchRoot(u64),
    #[error("invalid field description: {0}")]
    InvalidField(String),
    #[error("operands belong to different polynomial rings")]
    ContextMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Buchberger pair budget of {0} exceeded")]
    PairBudgetExceeded(usize),
    #[error("input is not homogeneous")]
    NonHomogeneousInput,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("group order exceeds the cap of {0}")]
    OrderCapExceeded(usize),
    #[error("polynomial is not fixed by the subgroup")]
    NotHInvariant,
    #[error("the characteristic divides the group order")]
    ModularCase,
    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),
    #[error("expected {expected} elements, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("relation expects {expected} generators, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("not a homogeneous system of parameters")]
    NotAnHsop,
    #[error("invalid coset representatives: {0}")]
    InvalidCosets(String),
    #[error("strand at degree {degree} exceeded its closed-form dimension {expected} (got {got})")]
    StabilizationFailure { degree: i64, expected: usize, got: usize },
    #[error("no power up to {0} realises the strand")]
    PowerBudgetExceeded(u32),
    #[error("the group contains transvections; the cokernel description does not apply")]
    TransvectionsPresent,
    #[error("a-invariant search reached the floor {0} without a nonzero strand")]
    SearchFloorReached(i64),
    #[error("presentation is not asserted to be Cohen-Macaulay")]
    CMNotAsserted,
    #[error("class power {class} exceeds strand power {strand}")]
    PowerTooHigh { class: u32, strand: u32 },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
