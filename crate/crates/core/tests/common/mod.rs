#![allow(dead_code)]

use latdom::{audit, influence, is_two_packing, transpose_set, Coord, Lattice, VertexSet};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn any_lattice() -> impl Strategy<Value = Lattice> {
    prop_oneof![
        (1..=8usize, 1..=8usize).prop_map(|(m, n)| Lattice::rect(m, n).unwrap()),
        (3..=7usize, 3..=7usize).prop_map(|(m, n)| Lattice::rect_torus(m, n).unwrap()),
        (1..=7usize).prop_map(|s| Lattice::tri(s).unwrap()),
        (3..=7usize, 3..=7usize).prop_map(|(m, n)| Lattice::tri_torus(m, n).unwrap()),
        (1..=7usize, 1..=7usize).prop_map(|(m, n)| Lattice::hex(m, n).unwrap()),
        (2..=4usize, 2..=4usize).prop_map(|(a, b)| Lattice::hex_torus(2 * a, 2 * b).unwrap()),
    ]
}

/// A lattice with a small arbitrary vertex set, often but not always a 2-packing.
pub fn lattice_and_set() -> impl Strategy<Value = (Lattice, VertexSet)> {
    any_lattice().prop_flat_map(|lat| {
        let n = lat.vertex_count();
        proptest::collection::vec(0..n, 0..=5).prop_map(move |idx| {
            let verts = lat.vertices();
            (lat, idx.into_iter().map(|k| verts[k]).collect())
        })
    })
}

/// Rectangle with a set built greedily from random picks, so always a 2-packing.
pub fn rect_and_packing() -> impl Strategy<Value = (usize, usize, VertexSet)> {
    (1..=10usize, 1..=10usize).prop_flat_map(|(m, n)| {
        proptest::collection::vec((1..=m, 1..=n), 0..=30).prop_map(move |picks| {
            let lat = Lattice::rect(m, n).unwrap();
            let mut set = VertexSet::new();
            for (i, j) in picks {
                let c = Coord::new(i, j);
                if set.iter().all(|s| lat.distance(s, c).unwrap() >= 3) {
                    set.insert(c);
                }
            }
            (m, n, set)
        })
    })
}

pub fn rect_and_pair() -> impl Strategy<Value = (usize, usize, Coord, Coord)> {
    (1..=8usize, 1..=8usize).prop_flat_map(|(m, n)| {
        ((1..=m, 1..=n), (1..=m, 1..=n))
            .prop_map(move |(a, b)| (m, n, Coord::from(a), Coord::from(b)))
    })
}

pub fn adjacency_symmetry(lat: &Lattice) -> Result<(), TestCaseError> {
    let reg = lat.kind().regular_degree();
    for v in lat.vertices() {
        let nbrs = lat.neighbors(v).unwrap();
        prop_assert!(nbrs.len() <= reg);
        if lat.is_torus() && lat.rows() >= 4 && lat.cols() >= 4 {
            prop_assert_eq!(nbrs.len(), reg, "{} at {:?}", lat, v);
        }
        for w in nbrs {
            prop_assert_ne!(w, v);
            prop_assert!(
                lat.neighbors(w).unwrap().contains(&v),
                "{}: {:?} -> {:?}",
                lat,
                v,
                w
            );
        }
    }
    Ok(())
}

pub fn distance_matches_bfs(m: usize, n: usize, u: Coord, v: Coord) -> Result<(), TestCaseError> {
    let lat = Lattice::rect(m, n).unwrap();
    let g = lat.graph();
    let hops = g.bfs(lat.index_of(u).unwrap())[lat.index_of(v).unwrap()];
    prop_assert_eq!(hops, Some(u.i.abs_diff(v.i) + u.j.abs_diff(v.j)));
    prop_assert_eq!(lat.distance(u, v).unwrap(), hops.unwrap());
    Ok(())
}

/// Pairwise distance at least 3 iff no closed neighborhood meets the set twice.
pub fn dual_characterization(lat: &Lattice, set: &VertexSet) -> Result<(), TestCaseError> {
    let g = lat.graph();
    let members: Vec<usize> = set.iter().map(|c| lat.index_of(c).unwrap()).collect();
    let pairwise = members.iter().all(|&a| {
        let d = g.bfs(a);
        members
            .iter()
            .all(|&b| a == b || d[b].is_none_or(|x| x >= 3))
    });
    let closed = lat.vertices().into_iter().all(|x| {
        let hits = lat
            .neighbors(x)
            .unwrap()
            .into_iter()
            .chain([x])
            .filter(|&y| set.contains(y))
            .count();
        hits <= 1
    });
    prop_assert_eq!(pairwise, closed);
    prop_assert_eq!(is_two_packing(lat, set).unwrap(), pairwise);
    prop_assert_eq!(audit(lat, set).unwrap().is_two_packing, pairwise);
    Ok(())
}

/// For a 2-packing the dominated count is `Σ(1 + deg v)`; EDS iff it reaches `|V|`.
pub fn influence_identity(lat: &Lattice, set: &VertexSet) -> Result<(), TestCaseError> {
    let report = audit(lat, set).unwrap();
    let degree_sum: usize = set.iter().map(|v| 1 + lat.degree(v).unwrap()).sum();
    prop_assert_eq!(report.degree_sum, degree_sum);
    if report.is_two_packing {
        prop_assert_eq!(influence(lat, set).unwrap(), degree_sum);
        prop_assert_eq!(report.influence, degree_sum);
        prop_assert_eq!(report.is_eds, degree_sum == lat.vertex_count());
        prop_assert_eq!(report.voids.len(), lat.vertex_count() - degree_sum);
        // dropping a member loses exactly its closed neighborhood
        if let Some(v) = set.iter().next() {
            let mut smaller = set.clone();
            smaller.remove(v);
            prop_assert!(is_two_packing(lat, &smaller).unwrap());
            prop_assert_eq!(
                influence(lat, &smaller).unwrap(),
                degree_sum - 1 - lat.degree(v).unwrap()
            );
        }
    } else {
        prop_assert!(influence(lat, set).is_err());
        prop_assert!(report.influence < degree_sum);
        prop_assert!(!report.conflicts.is_empty());
    }
    Ok(())
}

pub fn transpose_invariance(m: usize, n: usize, set: &VertexSet) -> Result<(), TestCaseError> {
    let a = audit(&Lattice::rect(m, n).unwrap(), set).unwrap();
    let b = audit(&Lattice::rect(n, m).unwrap(), &transpose_set(set)).unwrap();
    prop_assert_eq!(a.influence, b.influence);
    prop_assert_eq!(a.is_two_packing, b.is_two_packing);
    prop_assert_eq!(transpose_set(&a.voids), b.voids);
    prop_assert_eq!(transpose_set(&a.conflicts), b.conflicts);
    Ok(())
}
