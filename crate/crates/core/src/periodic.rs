//! Periodic perfect codes of the infinite lattices, checked on torus quotients.
//!
//! Domination is a radius-one condition, so a motif that is perfect on a
//! torus lifts to a perfect code of the infinite lattice it covers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Coord, Lattice, LatticeKind, Topology};
use crate::packing::{audit, DominationReport, VertexSet};

/// Rectangular knight offsets `(i+1, j-2), (i+2, j+1), (i-1, j+2), (i-2, j-1)`.
pub const RECT_GENERATORS: [(isize, isize); 4] = [(1, -2), (2, 1), (-1, 2), (-2, -1)];

/// Triangular offsets `(i-1, j+2), (i+1, j-2), (i+2, j), (i-2, j)` in the
/// row labeling where `v_{i,j}` touches `v_{i±1,j}`, `v_{i+1,j+1}`,
/// `v_{i-1,j-1}` and `v_{i,j±1}`.
pub const TRI_ROW_GENERATORS: [(isize, isize); 4] = [(-1, 2), (1, -2), (2, 0), (-2, 0)];

/// The three distance-3 directions of a triangular perfect code in the same
/// row labeling (with their negatives).
pub const TRI_ROW_CODE_VECTORS: [(isize, isize); 3] = [(1, -2), (3, 1), (2, 3)];

/// Row labeling to axial: `(a, b) ↦ (a, -b)` carries the neighbor offsets
/// `±(1,0), ±(0,1), ±(1,1)` onto the axial set `±(1,0), ±(0,1), ±(1,-1)`.
pub fn tri_row_to_axial((a, b): (isize, isize)) -> (isize, isize) {
    (a, -b)
}

const HEX_PERIODS: (usize, usize) = (4, 4);
const HEX_CELLS: [(usize, usize); 4] = [(1, 1), (2, 3), (3, 3), (4, 1)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Motif {
    pub kind: LatticeKind,
    /// Torus dimensions `(rows, cols)` of the fundamental domain.
    pub periods: (usize, usize),
    pub cells: VertexSet,
}

impl Motif {
    pub fn new(kind: LatticeKind, periods: (usize, usize), cells: VertexSet) -> Result<Self> {
        let m = Motif {
            kind,
            periods,
            cells,
        };
        let torus = m.torus()?;
        for c in &m.cells {
            torus.check(c)?;
        }
        Ok(m)
    }

    pub fn torus(&self) -> Result<Lattice> {
        Lattice::new(self.kind, self.periods.0, self.periods.1, Topology::Torus)
    }

    pub fn density(&self) -> f64 {
        self.cells.len() as f64 / (self.periods.0 * self.periods.1) as f64
    }

    /// Whether the lifted motif contains `(i, j)`, for any integers.
    pub fn covers(&self, i: isize, j: isize) -> bool {
        let (p, q) = (self.periods.0 as isize, self.periods.1 as isize);
        let c = Coord::new(
            (i - 1).rem_euclid(p) as usize + 1,
            (j - 1).rem_euclid(q) as usize + 1,
        );
        self.cells.contains(c)
    }

    /// Every cell shifted by every offset lands on a cell.
    pub fn is_closed_under(&self, offsets: &[(isize, isize)]) -> bool {
        self.cells.iter().all(|c| {
            offsets
                .iter()
                .all(|&(di, dj)| self.covers(c.i as isize + di, c.j as isize + dj))
        })
    }
}

/// Perfect code `{(i, j) : 2i + j ≡ residue (mod 5)}` on the 5 x 5 torus.
pub fn rect_code_motif(residue: usize) -> Motif {
    let cells = (1..=5)
        .flat_map(|i| (1..=5).map(move |j| Coord::new(i, j)))
        .filter(|c| (2 * c.i + c.j) % 5 == residue % 5)
        .collect();
    Motif {
        kind: LatticeKind::Rectangular,
        periods: (5, 5),
        cells,
    }
}

/// Perfect code `{(i, j) : i + 3j ≡ residue (mod 7)}` on the 7 x 7 axial torus.
/// The closed-neighborhood offsets take the residues `0, ±1, ±2, ±3`.
pub fn tri_code_motif(residue: usize) -> Motif {
    let cells = (1..=7)
        .flat_map(|i| (1..=7).map(move |j| Coord::new(i, j)))
        .filter(|c| (c.i + 3 * c.j) % 7 == residue % 7)
        .collect();
    Motif {
        kind: LatticeKind::Triangular,
        periods: (7, 7),
        cells,
    }
}

/// Density-1/4 perfect code on the 4 x 4 brick-wall torus, closed under
/// taking the opposite vertex in each hexagon.
pub fn hex_code_motif() -> Motif {
    Motif {
        kind: LatticeKind::Hexagonal,
        periods: HEX_PERIODS,
        cells: VertexSet::from(HEX_CELLS),
    }
}

pub fn verify_perfect(motif: &Motif) -> Result<DominationReport> {
    audit(&motif.torus()?, &motif.cells)
}

/// Translates of the motif falling in the `rows x cols` window anchored at `(1, 1)`.
pub fn expand_motif(motif: &Motif, rows: usize, cols: usize) -> VertexSet {
    (1..=rows)
        .flat_map(|i| (1..=cols).map(move |j| Coord::new(i, j)))
        .filter(|c| motif.covers(c.i as isize, c.j as isize))
        .collect()
}

/// Hexagonal faces of a brick-wall lattice as 6-cycles.
///
/// A face spans rows `i, i+1` and columns `j..=j+2` with `i + j` even; the
/// cycle runs along row `i` and back along row `i + 1`, so positions `k` and
/// `k + 3` are opposite.
pub fn hex_faces(lat: &Lattice) -> Result<Vec<[Coord; 6]>> {
    if lat.kind() != LatticeKind::Hexagonal {
        return Err(Error::Domain(format!("{lat} is not a hexagonal lattice")));
    }
    let mut faces = Vec::new();
    for i in 1..=lat.rows() {
        for j in 1..=lat.cols() {
            if (i + j) % 2 != 0 {
                continue;
            }
            let at = |di: isize, dj: isize| lat.step(Coord::new(i, j), di, dj);
            let cycle = [at(0, 0), at(0, 1), at(0, 2), at(1, 2), at(1, 1), at(1, 0)];
            if let [Some(a), Some(b), Some(c), Some(d), Some(e), Some(f)] = cycle {
                faces.push([a, b, c, d, e, f]);
            }
        }
    }
    Ok(faces)
}

/// The vertex across each hexagon containing `v`.
pub fn hex_opposites(faces: &[[Coord; 6]], v: Coord) -> Vec<Coord> {
    let mut out: Vec<Coord> = faces
        .iter()
        .filter_map(|f| f.iter().position(|&x| x == v).map(|k| f[(k + 3) % 6]))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// All perfect codes of the hexagonal torus that are closed under the
/// opposite-vertex moves, by exhaustive search over sets of the right size.
pub fn search_hex_motifs(rows: usize, cols: usize) -> Result<Vec<VertexSet>> {
    let torus = Lattice::hex_torus(rows, cols)?;
    let n = torus.vertex_count();
    if n % 4 != 0 {
        return Ok(Vec::new());
    }
    let faces = hex_faces(&torus)?;
    let verts = torus.vertices();
    let graph = torus.graph();
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    let mut covered = vec![false; n];
    search_codes(
        &graph,
        n / 4,
        0,
        &mut chosen,
        &mut covered,
        &mut |members| {
            let set: VertexSet = members.iter().map(|&v| verts[v]).collect();
            let closed = set.iter().all(|v| {
                hex_opposites(&faces, v)
                    .into_iter()
                    .all(|o| set.contains(o))
            });
            if closed {
                found.push(set);
            }
        },
    );
    Ok(found)
}

// Perfect codes by "lowest undominated vertex must be covered by one of its closed neighbors".
fn search_codes(
    graph: &crate::grid::Graph,
    remaining: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    covered: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let Some(first) = (from..graph.order()).find(|&v| !covered[v]) else {
        if remaining == 0 {
            emit(chosen);
        }
        return;
    };
    if remaining == 0 {
        return;
    }
    let mut candidates: Vec<usize> = graph
        .neighbors(first)
        .iter()
        .copied()
        .chain([first])
        .collect();
    candidates.sort_unstable();
    for c in candidates {
        let closed: Vec<usize> = graph.neighbors(c).iter().copied().chain([c]).collect();
        if closed.iter().any(|&x| covered[x]) {
            continue;
        }
        for &x in &closed {
            covered[x] = true;
        }
        chosen.push(c);
        search_codes(graph, remaining - 1, first, chosen, covered, emit);
        chosen.pop();
        for &x in &closed {
            covered[x] = false;
        }
    }
}
