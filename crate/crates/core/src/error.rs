use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("expected {expected} generators, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("term order is not global")]
    NonGlobalOrder,
    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),
    #[error("weight vector lies outside the cone")]
    OutsideCone,
    #[error("input is not a Sagbi basis under the start order")]
    NotSagbiBasis,
    #[error("no separating weight found: {0}")]
    Infeasible(String),
    /// A resource cap tripped; for Sagbi construction this usually means the
    /// subalgebra has no finite Sagbi basis under the active order.
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GuardExceeded(_) => 2,
            Error::NotSagbiBasis | Error::NonGlobalOrder | Error::OutsideCone => 3,
            _ => 1,
        }
    }
}
