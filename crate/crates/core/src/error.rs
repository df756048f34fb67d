use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments of an operation does not hold.
    #[error("{op}: {requirement}")]
    Domain {
        op: &'static str,
        requirement: String,
    },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Two routes that must agree exactly produced different values.
    #[error("identity violated in {identity}: {lhs} != {rhs}")]
    IdentityViolation {
        identity: &'static str,
        lhs: String,
        rhs: String,
    },

    /// A value that must be integral was not.
    #[error("{what} is not an integer: {value}")]
    NotInteger { what: &'static str, value: String },

    #[error("argument exceeds resource guard: {0}")]
    ResourceLimit(String),

    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    #[error("zero denominator")]
    ZeroDenominator,
}

pub(crate) fn domain(op: &'static str, requirement: impl Into<String>) -> Error {
    Error::Domain {
        op,
        requirement: requirement.into(),
    }
}
