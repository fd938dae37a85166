//! Efficient domination (perfect codes) on rectangular, triangular and
//! hexagonal lattice graphs.
//!
//! * [`grid`]: lattices, coordinates and adjacency.
//! * [`packing`]: vertex sets and the domination audit.
//! * [`constructions`]: explicit 2-packings of finite grids and the near-grid augmentation.
//! * [`periodic`]: perfect-code motifs verified on torus quotients.
//! * [`solver`]: exact `F(G)` by backtracking and by a column-profile sweep.

pub mod constructions;
pub mod error;
pub mod grid;
pub mod packing;
pub mod periodic;
pub mod solver;

pub use error::{Error, Result};
pub use grid::{Coord, Graph, Lattice, LatticeKind, Topology};
pub use packing::{audit, influence, is_two_packing, transpose_set, DominationReport, VertexSet};
pub use solver::{Limits, SolveResult};
