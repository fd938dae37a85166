//! Exact computation of the efficient domination number `F(G)`, the largest
//! influence of any 2-packing.
//!
//! Two independent routes: [`brute_force_f`] backtracks over arbitrary small
//! graphs, [`dp_f_rect`] sweeps column profiles across rectangular grids.

mod brute;
mod dp;
mod table;

use std::time::Duration;

use serde::Serialize;

pub use brute::{brute_force_augmented, brute_force_f, brute_force_graph, GraphSolution};
pub use dp::{dp_f_rect, dp_f_rect_value, ColumnProfile};
pub use table::{check_conjecture, table_voids, ConjectureRow, RowStatus, VoidRow};

use crate::packing::VertexSet;

pub const DEFAULT_MAX_VERTICES: usize = 49;
pub const DEFAULT_MAX_WIDTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for backtracking.
    pub max_vertices: usize,
    /// Row cap for the column-profile sweep.
    pub max_width: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_width: DEFAULT_MAX_WIDTH,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult<W = VertexSet> {
    pub f_value: usize,
    pub witness: W,
    /// Search nodes (backtracking) or evaluated transitions (sweep).
    pub explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}
