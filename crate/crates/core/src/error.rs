use thiserror::Error;

use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relations contain a directed cycle through element {}", element + 1)]
    Cycle { element: usize },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    Size {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("element index {index} out of range for a ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("set family is empty")]
    EmptyFamily,

    #[error("family is not closed under union and intersection ({a} and {b})")]
    NotLattice { a: ElementSet, b: ElementSet },

    #[error("edge ({u}, {v}) has negative weight {weight}")]
    NegativeWeight { u: usize, v: usize, weight: i64 },

    #[error("value at {set} is -inf")]
    InfiniteValue { set: ElementSet },

    #[error("non-integer value {0}")]
    NonInteger(String),

    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
