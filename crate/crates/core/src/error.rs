use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("cannot parse Lie type {0:?}: expected a family letter A-D followed by a rank, e.g. \"A3\"")]
    BadTypeString(String),

    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("root coefficients {0:?} mix positive and negative entries")]
    MixedSignRoot(Vec<i64>),

    #[error("{0:?} is not a positive root of this system")]
    NotARoot(Vec<i64>),

    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight is not P_S-dominant: label {label} at node {index} is not a nonnegative integer")]
    NotDominant { index: usize, label: String },

    #[error("multiplet closure exceeded its safety cap of {cap} vertices (internal invariant violated)")]
    CapExceeded { cap: usize },

    #[error("{family}: parameter constraint violated: {rule}")]
    RealFormConstraint {
        family: &'static str,
        rule: &'static str,
    },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),
}
