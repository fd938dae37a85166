mod common;

use latdom::constructions::*;
use latdom::{audit, is_two_packing, Lattice, VertexSet};
use proptest::prelude::*;

fn rect(m: usize, n: usize) -> Lattice {
    Lattice::rect(m, n).unwrap()
}

#[test]
fn two_row_sets() {
    for n in (1..=99).step_by(2) {
        let r = audit(&rect(2, n), &eds_pn_p2(n).unwrap()).unwrap();
        assert!(r.is_eds, "2x{n}");
        assert_eq!(r.influence, 2 * n);
    }
    for n in (2..=100).step_by(2) {
        let r = audit(&rect(2, n), &fset_pn_p2_even(n).unwrap()).unwrap();
        assert!(r.is_two_packing);
        assert_eq!(r.influence, 2 * n - 1, "2x{n}");
    }
}

#[test]
fn three_row_sets() {
    for n in 4..=60 {
        let r = audit(&rect(3, n), &fset_pn_p3(n).unwrap()).unwrap();
        assert!(r.is_two_packing, "3x{n}");
        assert_eq!(r.influence, 3 * n - n / 3, "3x{n}");
        assert_eq!(r.voids.len(), n / 3, "3x{n}");
    }
    let r = audit(&rect(3, 3), &fset_pn_p3(3).unwrap()).unwrap();
    assert_eq!((r.influence, r.voids.len()), (7, 2));
}

#[test]
fn knight_sets() {
    for n in 7..=60 {
        let p = knight_construction(n).unwrap();
        let r = audit(&rect(n, n), &p.full_set).unwrap();
        assert!(r.is_two_packing, "n = {n}");
        assert!(is_two_packing(&rect(n, n), &p.full_set).unwrap());
        assert_eq!(r.influence, lower_bound_f(n).unwrap(), "n = {n}");
        assert_eq!(r.voids.len(), predicted_voids(n).unwrap(), "n = {n}");
        assert!(
            r.voids
                .iter()
                .all(|v| v.i == 1 || v.j == 1 || v.i == n || v.j == n),
            "n = {n}"
        );
        let mut seeded = VertexSet::new();
        for (seed, ray) in &p.rays {
            seeded.insert(*seed);
            for &c in ray {
                seeded.insert(c);
            }
        }
        assert_eq!(seeded, p.full_set);
    }
}

#[test]
fn every_output_is_a_packing() {
    for n in 1..=60 {
        let mut sets = Vec::new();
        if n % 2 == 1 {
            sets.push((2, eds_pn_p2(n).unwrap()));
        } else {
            sets.push((2, fset_pn_p2_even(n).unwrap()));
        }
        if n >= 3 {
            sets.push((3, fset_pn_p3(n).unwrap()));
        }
        for (m, set) in sets {
            assert!(is_two_packing(&rect(m, n), &set).unwrap(), "{m}x{n}");
        }
    }
}

#[test]
fn augmenting_the_knight_pattern() {
    let set = knight_construction(11).unwrap().full_set;
    let (aug, chosen) = near_grid_augment(&rect(11, 11), &set).unwrap();
    assert_eq!(aug.pendants.len(), predicted_voids(11).unwrap());
    let r = aug.audit(&chosen).unwrap();
    assert!(r.is_eds);
    assert_eq!(r.influence, aug.vertex_count());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn augmentation_always_perfect((m, n, set) in common::rect_and_packing()) {
        let (aug, chosen) = near_grid_augment(&rect(m, n), &set).unwrap();
        let r = aug.audit(&chosen).unwrap();
        prop_assert!(r.is_eds);
        prop_assert_eq!(aug.pendants.len(), audit(&rect(m, n), &set).unwrap().voids.len());
    }
}
