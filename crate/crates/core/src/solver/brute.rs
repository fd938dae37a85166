use std::time::Instant;

use crate::constructions::{AugmentedLattice, AugmentedSet};
use crate::error::{Error, Result};
use crate::grid::{Graph, Lattice};
use crate::packing::{audit, VertexSet};

use super::{Limits, SolveResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSolution {
    pub f_value: usize,
    /// Optimal 2-packing as vertex indices, ascending.
    pub members: Vec<usize>,
    pub explored: u64,
}

struct Search<'g> {
    graph: &'g Graph,
    /// Vertices whose closed neighborhood is fully decided once index `k` is decided.
    closing: Vec<Vec<usize>>,
    coverage: Vec<u8>,
    chosen: Vec<usize>,
    weight: usize,
    undominated: usize,
    sealed_voids: usize,
    best: usize,
    best_set: Vec<usize>,
    explored: u64,
}

impl Search<'_> {
    fn run(&mut self, idx: usize) {
        self.explored += 1;
        if idx == self.graph.order() {
            if self.weight > self.best {
                self.best = self.weight;
                self.best_set = self.chosen.clone();
            }
            return;
        }
        // every vertex not yet dominated and not sealed off could still be covered
        if self.weight + self.undominated - self.sealed_voids <= self.best {
            return;
        }

        let free = self.coverage[idx] == 0
            && self
                .graph
                .neighbors(idx)
                .iter()
                .all(|&w| self.coverage[w] == 0);
        if free {
            self.take(idx);
            self.descend(idx);
            self.untake(idx);
        }
        self.descend(idx);
    }

    fn descend(&mut self, idx: usize) {
        let sealed = self.closing[idx]
            .iter()
            .filter(|&&x| self.coverage[x] == 0)
            .count();
        self.sealed_voids += sealed;
        self.run(idx + 1);
        self.sealed_voids -= sealed;
    }

    fn take(&mut self, v: usize) {
        self.chosen.push(v);
        self.weight += 1 + self.graph.degree(v);
        self.coverage[v] = 1;
        for &w in self.graph.neighbors(v) {
            self.coverage[w] = 1;
        }
        self.undominated -= 1 + self.graph.degree(v);
    }

    fn untake(&mut self, v: usize) {
        self.chosen.pop();
        self.weight -= 1 + self.graph.degree(v);
        self.coverage[v] = 0;
        for &w in self.graph.neighbors(v) {
            self.coverage[w] = 0;
        }
        self.undominated += 1 + self.graph.degree(v);
    }
}

/// Exact maximum influence by depth-first backtracking in index order,
/// including a vertex before excluding it. Ties keep the first optimum found.
pub fn brute_force_graph(graph: &Graph, max_vertices: usize) -> Result<GraphSolution> {
    let n = graph.order();
    if n > max_vertices {
        return Err(Error::LimitExceeded {
            what: "vertex count",
            actual: n,
            limit: max_vertices,
            hint: "use the column-profile solver for rectangular grids or raise the vertex limit",
        });
    }
    let mut closing = vec![Vec::new(); n];
    for x in 0..n {
        let last = graph.neighbors(x).iter().copied().chain([x]).max().unwrap();
        closing[last].push(x);
    }
    let mut search = Search {
        graph,
        closing,
        coverage: vec![0; n],
        chosen: Vec::new(),
        weight: 0,
        undominated: n,
        sealed_voids: 0,
        best: 0,
        best_set: Vec::new(),
        explored: 0,
    };
    search.run(0);
    Ok(GraphSolution {
        f_value: search.best,
        members: search.best_set,
        explored: search.explored,
    })
}

/// `F(lat)` by exhaustive backtracking, refusing lattices above `limits.max_vertices`.
pub fn brute_force_f(lat: &Lattice, limits: &Limits) -> Result<SolveResult> {
    let start = Instant::now();
    let sol = brute_force_graph(&lat.graph(), limits.max_vertices)?;
    let vertices = lat.vertices();
    let witness: VertexSet = sol.members.iter().map(|&v| vertices[v]).collect();
    let report = audit(lat, &witness)?;
    assert!(
        report.is_two_packing && report.influence == sol.f_value,
        "witness failed its audit"
    );
    Ok(SolveResult {
        f_value: sol.f_value,
        witness,
        explored: sol.explored,
        elapsed: start.elapsed(),
    })
}

/// `F` of a grid with pendants attached.
pub fn brute_force_augmented(
    aug: &AugmentedLattice,
    limits: &Limits,
) -> Result<SolveResult<AugmentedSet>> {
    let start = Instant::now();
    let sol = brute_force_graph(&aug.graph(), limits.max_vertices)?;
    let witness = aug.set_from_indices(&sol.members);
    let report = aug.audit(&witness)?;
    assert!(
        report.is_two_packing && report.influence == sol.f_value,
        "witness failed its audit"
    );
    Ok(SolveResult {
        f_value: sol.f_value,
        witness,
        explored: sol.explored,
        elapsed: start.elapsed(),
    })
}
