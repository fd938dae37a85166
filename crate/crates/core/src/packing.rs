//! Candidate vertex sets and their domination audit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Coord, Graph, Lattice};

/// Duplicate-free set of coordinates kept in row-major order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Coord>", into = "Vec<Coord>")]
pub struct VertexSet {
    elems: Vec<Coord>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, c: Coord) -> bool {
        self.elems.binary_search(&c).is_ok()
    }

    /// Returns `false` if `c` was already present.
    pub fn insert(&mut self, c: Coord) -> bool {
        match self.elems.binary_search(&c) {
            Ok(_) => false,
            Err(pos) => {
                self.elems.insert(pos, c);
                true
            }
        }
    }

    pub fn remove(&mut self, c: Coord) -> bool {
        match self.elems.binary_search(&c) {
            Ok(pos) => {
                self.elems.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Coord> + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[Coord] {
        &self.elems
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|c| other.contains(c))
    }
}

impl From<Vec<Coord>> for VertexSet {
    fn from(mut elems: Vec<Coord>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        VertexSet { elems }
    }
}

impl From<VertexSet> for Vec<Coord> {
    fn from(s: VertexSet) -> Self {
        s.elems
    }
}

impl FromIterator<Coord> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Coord>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<const N: usize> From<[(usize, usize); N]> for VertexSet {
    fn from(pairs: [(usize, usize); N]) -> Self {
        pairs.into_iter().map(Coord::from).collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Coord;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Coord>>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter().copied()
    }
}

/// Per-vertex coverage `|N[v] ∩ S|` over an index graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coverage {
    pub counts: Vec<u32>,
    /// `Σ_{v∈S} (1 + deg v)`.
    pub weight: usize,
}

impl Coverage {
    pub fn compute(graph: &Graph, members: &[usize]) -> Self {
        let mut counts = vec![0u32; graph.order()];
        let mut weight = 0;
        for &v in members {
            counts[v] += 1;
            for &w in graph.neighbors(v) {
                counts[w] += 1;
            }
            weight += 1 + graph.degree(v);
        }
        Coverage { counts, weight }
    }

    pub fn dominated(&self) -> usize {
        self.counts.iter().filter(|&&c| c >= 1).count()
    }

    pub fn voids(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(v, _)| v)
    }

    pub fn conflicts(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c >= 2)
            .map(|(v, _)| v)
    }

    pub fn is_two_packing(&self) -> bool {
        self.counts.iter().all(|&c| c <= 1)
    }

    pub fn is_eds(&self) -> bool {
        self.counts.iter().all(|&c| c == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationReport {
    /// `(v, |N[v] ∩ S|)` for every vertex, row-major.
    #[serde(with = "coverage_triples")]
    pub coverage: Vec<(Coord, u32)>,
    pub voids: VertexSet,
    pub conflicts: VertexSet,
    pub is_two_packing: bool,
    pub is_eds: bool,
    /// Number of vertices with coverage at least one.
    pub influence: usize,
    /// `Σ_{v∈S} (1 + deg v)`; equals `influence` exactly when the set is a 2-packing.
    pub degree_sum: usize,
}

impl DominationReport {
    pub fn coverage_of(&self, c: Coord) -> Option<u32> {
        self.coverage
            .binary_search_by(|(x, _)| x.cmp(&c))
            .ok()
            .map(|k| self.coverage[k].1)
    }
}

mod coverage_triples {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::grid::Coord;

    pub fn serialize<S: Serializer>(v: &[(Coord, u32)], s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<[usize; 3]> = v.iter().map(|(c, n)| [c.i, c.j, *n as usize]).collect();
        triples.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(Coord, u32)>, D::Error> {
        let triples = Vec::<[usize; 3]>::deserialize(d)?;
        Ok(triples
            .into_iter()
            .map(|[i, j, n]| (Coord::new(i, j), n as u32))
            .collect())
    }
}

fn member_indices(lat: &Lattice, set: &VertexSet) -> Result<Vec<usize>> {
    set.iter()
        .map(|c| {
            lat.index_of(c).ok_or_else(|| Error::InvalidCoordinate {
                coord: c,
                lattice: lat.to_string(),
            })
        })
        .collect()
}

/// Single pass over closed neighborhoods of `set`.
pub fn audit(lat: &Lattice, set: &VertexSet) -> Result<DominationReport> {
    let members = member_indices(lat, set)?;
    let cov = Coverage::compute(&lat.graph(), &members);
    let vertices = lat.vertices();
    Ok(DominationReport {
        voids: cov.voids().map(|v| vertices[v]).collect(),
        conflicts: cov.conflicts().map(|v| vertices[v]).collect(),
        is_two_packing: cov.is_two_packing(),
        is_eds: cov.is_eds(),
        influence: cov.dominated(),
        degree_sum: cov.weight,
        coverage: vertices.iter().copied().zip(cov.counts).collect(),
    })
}

/// True iff every pair of members is at distance at least three.
pub fn is_two_packing(lat: &Lattice, set: &VertexSet) -> Result<bool> {
    let members = member_indices(lat, set)?;
    let graph = lat.graph();
    let mut member = vec![false; graph.order()];
    for &u in &members {
        member[u] = true;
    }
    // any other member within two steps of u
    for &u in &members {
        for &w in graph.neighbors(u) {
            if member[w] {
                return Ok(false);
            }
            if graph.neighbors(w).iter().any(|&x| x != u && member[x]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Σ_{v∈S} (1 + deg v)` for a 2-packing.
pub fn influence(lat: &Lattice, set: &VertexSet) -> Result<usize> {
    let report = audit(lat, set)?;
    if !report.is_two_packing {
        let first = report
            .conflicts
            .iter()
            .next()
            .expect("non-packing has a conflict");
        return Err(Error::NotTwoPacking {
            count: report.conflicts.len(),
            first,
        });
    }
    debug_assert_eq!(report.degree_sum, report.influence);
    Ok(report.degree_sum)
}

/// Image of `set` under `(i, j) ↦ (j, i)`.
pub fn transpose_set(set: &VertexSet) -> VertexSet {
    set.iter().map(Coord::transpose).collect()
}
