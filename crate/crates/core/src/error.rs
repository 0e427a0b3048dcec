use thiserror::Error;

use crate::poset::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation has a directed cycle through elements {0} and {1}")]
    Cycle(usize, usize),

    #[error("element index {index} out of range for a poset with {d} elements")]
    Index { index: usize, d: usize },

    #[error("element {0} cannot cover itself")]
    SelfCover(usize),

    #[error("connectivity is undefined for the empty set")]
    EmptySet,

    #[error("{0} is not an antichain")]
    NotAntichain(ElementSet),

    #[error("{0} is not a poset ideal")]
    NotIdeal(ElementSet),

    #[error("({0}, {1}) is not an edge pair of the order polytope")]
    NotInOmega(ElementSet, ElementSet),

    #[error("({0}, {1}) is not an edge pair of the chain polytope")]
    NotInPsi(ElementSet, ElementSet),

    #[error("{what} is {got}, above the limit of {limit}")]
    Size {
        what: &'static str,
        got: u128,
        limit: u128,
    },

    #[error("vertex {vertex} violates candidate inequality {inequality}")]
    NotValid { vertex: usize, inequality: usize },

    #[error("inequality has an all-zero coefficient vector")]
    ZeroInequality,

    #[error("finite difference of dilation counts is {0}; input is not a lattice polytope in the unit cube")]
    NegativeVolume(i128),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
