use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Coord, Graph, Lattice, LatticeKind, Topology};
use crate::packing::{audit, Coverage, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Pendant {
    pub id: usize,
    pub attached_to: Coord,
}

/// A bounded grid with degree-one vertices hung on chosen grid vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentedLattice {
    pub base: Lattice,
    pub pendants: Vec<Pendant>,
}

/// Vertex set of an augmented lattice: grid members plus pendant ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AugmentedSet {
    pub grid: VertexSet,
    pub pendants: Vec<usize>,
}

impl AugmentedSet {
    pub fn len(&self) -> usize {
        self.grid.len() + self.pendants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentedReport {
    pub vertex_count: usize,
    pub is_two_packing: bool,
    pub is_eds: bool,
    pub influence: usize,
    pub grid_voids: VertexSet,
    pub pendant_voids: Vec<usize>,
    pub conflicts: usize,
}

impl AugmentedLattice {
    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count() + self.pendants.len()
    }

    /// Grid vertices keep their row-major indices; pendant `id` follows at `|V(base)| + id`.
    pub fn graph(&self) -> Graph {
        let mut g = self.base.graph();
        for p in &self.pendants {
            let at = self
                .base
                .index_of(p.attached_to)
                .expect("pendant on a grid vertex");
            g.add_pendant(at);
        }
        g
    }

    pub fn indices(&self, set: &AugmentedSet) -> Result<Vec<usize>> {
        let base_n = self.base.vertex_count();
        let mut out = Vec::with_capacity(set.len());
        for c in &set.grid {
            self.base.check(c)?;
            out.push(self.base.index_of(c).expect("checked"));
        }
        for &id in &set.pendants {
            if id >= self.pendants.len() {
                return Err(Error::Domain(format!("no pendant with id {id}")));
            }
            out.push(base_n + id);
        }
        Ok(out)
    }

    /// Inverse of [`indices`](Self::indices).
    pub fn set_from_indices(&self, members: &[usize]) -> AugmentedSet {
        let base_n = self.base.vertex_count();
        let vertices = self.base.vertices();
        let mut set = AugmentedSet::default();
        for &v in members {
            if v < base_n {
                set.grid.insert(vertices[v]);
            } else {
                set.pendants.push(v - base_n);
            }
        }
        set.pendants.sort_unstable();
        set
    }

    pub fn audit(&self, set: &AugmentedSet) -> Result<AugmentedReport> {
        let members = self.indices(set)?;
        let cov = Coverage::compute(&self.graph(), &members);
        let base_n = self.base.vertex_count();
        let vertices = self.base.vertices();
        Ok(AugmentedReport {
            vertex_count: self.vertex_count(),
            is_two_packing: cov.is_two_packing(),
            is_eds: cov.is_eds(),
            influence: cov.dominated(),
            grid_voids: cov
                .voids()
                .filter(|&v| v < base_n)
                .map(|v| vertices[v])
                .collect(),
            pendant_voids: cov
                .voids()
                .filter(|&v| v >= base_n)
                .map(|v| v - base_n)
                .collect(),
            conflicts: cov.conflicts().count(),
        })
    }
}

/// Hangs one pendant on every void of the 2-packing `set`; the set together
/// with all pendants is an efficient dominating set of the result.
pub fn near_grid_augment(
    lat: &Lattice,
    set: &VertexSet,
) -> Result<(AugmentedLattice, AugmentedSet)> {
    if lat.kind() != LatticeKind::Rectangular || lat.topology() != Topology::Bounded {
        return Err(Error::Domain(format!(
            "near-grid augmentation needs a bounded rectangular grid, got {lat}"
        )));
    }
    let report = audit(lat, set)?;
    if !report.is_two_packing {
        let first = report.conflicts.iter().next().expect("conflict present");
        return Err(Error::NotTwoPacking {
            count: report.conflicts.len(),
            first,
        });
    }
    let pendants: Vec<Pendant> = report
        .voids
        .iter()
        .enumerate()
        .map(|(id, attached_to)| Pendant { id, attached_to })
        .collect();
    let chosen = AugmentedSet {
        grid: set.clone(),
        pendants: (0..pendants.len()).collect(),
    };
    Ok((
        AugmentedLattice {
            base: *lat,
            pendants,
        },
        chosen,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{eds_p4_p4, fset_pn_p3};

    #[test]
    fn three_by_three_gains_two_pendants() {
        let lat = Lattice::rect(3, 3).unwrap();
        let (aug, set) = near_grid_augment(&lat, &fset_pn_p3(3).unwrap()).unwrap();
        assert_eq!(aug.vertex_count(), 11);
        assert_eq!(set.len(), 4);
        let r = aug.audit(&set).unwrap();
        assert!(r.is_eds);
        assert_eq!(r.influence, 11);
    }

    #[test]
    fn perfect_input_is_unchanged() {
        let lat = Lattice::rect(4, 4).unwrap();
        let (aug, set) = near_grid_augment(&lat, &eds_p4_p4()).unwrap();
        assert!(aug.pendants.is_empty());
        assert_eq!(set.grid, eds_p4_p4());
        assert_eq!(aug.graph(), lat.graph());
        assert!(aug.audit(&set).unwrap().is_eds);
    }

    #[test]
    fn rejects_overlapping_sets() {
        let lat = Lattice::rect(3, 3).unwrap();
        let err = near_grid_augment(&lat, &VertexSet::from([(1, 1), (1, 3)])).unwrap_err();
        assert!(matches!(err, Error::NotTwoPacking { .. }));
        assert!(near_grid_augment(&Lattice::rect_torus(5, 5).unwrap(), &VertexSet::new()).is_err());
    }

    #[test]
    fn pendant_degrees() {
        let lat = Lattice::rect(3, 3).unwrap();
        let (aug, _) = near_grid_augment(&lat, &VertexSet::from([(2, 2)])).unwrap();
        let g = aug.graph();
        assert_eq!(aug.pendants.len(), 4);
        for id in 0..4 {
            assert_eq!(g.degree(9 + id), 1);
        }
    }
}
