use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants other than [`Error::Invariant`] describe bad input. `Invariant`
/// means an internal consistency check failed and is always a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error(
        "eigenvalue #{position} is zero; x acts nilpotently on the generalized 0-eigenspace, \
         so pass only the nonzero spectrum"
    )]
    ZeroEigenvalue { position: usize },

    #[error("table is not associative: ({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}")]
    NotAssociative {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("operation requires a commutative semigroup")]
    NotCommutative,

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
