use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word of length {length} exceeds truncation depth {depth}")]
    DepthExceeded { length: usize, depth: usize },
    #[error("a denominator factor vanishes identically under substitution")]
    ZeroDenominator,
    #[error("rational function uses {needed} slots but only {given} forms were supplied")]
    SlotMismatch { needed: usize, given: usize },
    #[error("mould is not invertible: depth-0 component is {0}, expected 1")]
    NotInvertible(String),
    #[error("{op} is not defined here: depth-0 component is {found}, expected {expected}")]
    NotDefined {
        op: &'static str,
        found: String,
        expected: &'static str,
    },
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("verification of `{claim}` failed at depth {depth}: residual {residual}")]
    VerificationFailed {
        claim: String,
        depth: usize,
        residual: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
