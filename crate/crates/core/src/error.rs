use thiserror::Error;

use crate::grid::Coord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("coordinate {coord} is not a vertex of {lattice}")]
    InvalidCoordinate { coord: Coord, lattice: String },

    #[error("cannot parse lattice descriptor {0:?} (expected rect:MxN, rect-torus:MxN, tri:S, tri-torus:MxN, hex:MxN or hex-torus:MxN)")]
    BadDescriptor(String),

    #[error("{0}")]
    Domain(String),

    #[error(
        "set is not a 2-packing: {count} vertices are dominated more than once (first: {first})"
    )]
    NotTwoPacking { count: usize, first: Coord },

    #[error("{what} is {actual}, above the limit of {limit}; {hint}")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
        hint: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
