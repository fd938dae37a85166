mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn adjacency_is_symmetric(lat in any_lattice()) {
        adjacency_symmetry(&lat)?;
    }

    #[test]
    fn rect_distance_is_manhattan((m, n, u, v) in rect_and_pair()) {
        distance_matches_bfs(m, n, u, v)?;
    }

    #[test]
    fn two_packing_dual_forms((lat, set) in lattice_and_set()) {
        dual_characterization(&lat, &set)?;
    }

    #[test]
    fn influence_counts_closed_neighborhoods((lat, set) in lattice_and_set()) {
        influence_identity(&lat, &set)?;
    }

    #[test]
    fn transpose_preserves_audit((m, n, set) in rect_and_packing()) {
        transpose_invariance(m, n, &set)?;
    }
}
