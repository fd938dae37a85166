//! Explicit 2-packings for finite rectangular grids.
//!
//! All grids here are bounded rectangular lattices `rows x cols`; `P_n □ P_m`
//! is the grid with `m` rows and `n` columns.

mod augment;
mod knight;

pub use augment::{near_grid_augment, AugmentedLattice, AugmentedReport, AugmentedSet, Pendant};
pub use knight::{
    conjectured_f, knight_construction, lower_bound_f, predicted_voids, KnightPattern,
    LastVertexCase,
};

use crate::error::{Error, Result};
use crate::grid::Coord;
use crate::packing::VertexSet;

fn domain<T>(msg: String) -> Result<T> {
    Err(Error::Domain(msg))
}

/// Rows 1 and 2 alternate every two columns: `(1, j)` for `j ≡ 1`, `(2, j)` for `j ≡ 3 (mod 4)`.
fn two_row_chain(n: usize) -> VertexSet {
    (1..=n)
        .filter_map(|j| match j % 4 {
            1 => Some(Coord::new(1, j)),
            3 => Some(Coord::new(2, j)),
            _ => None,
        })
        .collect()
}

/// Efficient dominating set of the `2 x n` grid, `n` odd.
pub fn eds_pn_p2(n: usize) -> Result<VertexSet> {
    if n.is_multiple_of(2) {
        return domain(format!(
            "the 2x{n} grid has no efficient dominating set for even n; use fset_pn_p2_even"
        ));
    }
    Ok(two_row_chain(n))
}

/// Forced chain from `(1,1)` on the `2 x n` grid, `n` even: influence `2n - 1`,
/// the single void sitting at the far end of the row the chain misses.
pub fn fset_pn_p2_even(n: usize) -> Result<VertexSet> {
    if n == 0 || n % 2 == 1 {
        return domain(format!("fset_pn_p2_even needs a positive even n, got {n}"));
    }
    Ok(two_row_chain(n))
}

/// Maximum 2-packing of the `3 x n` grid with exactly `⌊n/3⌋` voids.
///
/// Columns are cut into `k = ⌊n/3⌋` blocks of width 3, the last widened to
/// 4 or 5 by `n mod 3`. Local `(r, c)` in block `b` is global `(r, 3(b-1) + c)`.
pub fn fset_pn_p3(n: usize) -> Result<VertexSet> {
    if n < 3 {
        return domain(format!("fset_pn_p3 needs n >= 3, got {n}"));
    }
    if n == 3 {
        return Ok(VertexSet::from([(1, 1), (3, 2)]));
    }
    let k = n / 3;
    let mut set = VertexSet::new();
    let mut put = |block: usize, local: &[(usize, usize)]| {
        for &(r, c) in local {
            set.insert(Coord::new(r, 3 * (block - 1) + c));
        }
    };
    for b in 1..k.saturating_sub(1) {
        put(b, &[(1, 1), (3, 2)]);
    }
    let (second_last, last): (&[_], &[_]) = match n % 3 {
        0 => (&[(2, 1), (1, 3)], &[(3, 1), (2, 3)]),
        1 => (&[(1, 1), (3, 2)], &[(1, 1), (3, 2), (2, 4)]),
        _ => (&[(1, 1), (3, 2)], &[(1, 1), (3, 2), (1, 4), (3, 5)]),
    };
    if k >= 2 {
        put(k - 1, second_last);
    }
    put(k, last);
    Ok(set)
}

/// An efficient dominating set of the 4 x 4 grid.
pub fn eds_p4_p4() -> VertexSet {
    VertexSet::from([(1, 2), (2, 4), (3, 1), (4, 3)])
}

/// Optimal 2-packings of the 5 x 5 (influence 23) and 6 x 6 (influence 33)
/// grids, as produced by the column-profile solver.
pub fn fset_square_small(n: usize) -> Result<VertexSet> {
    match n {
        5 => Ok(VertexSet::from(SQUARE_5)),
        6 => Ok(VertexSet::from(SQUARE_6)),
        _ => domain(format!(
            "fset_square_small covers n = 5 and n = 6 only, got {n}"
        )),
    }
}

const SQUARE_5: [(usize, usize); 6] = [(1, 2), (1, 5), (3, 1), (3, 4), (5, 2), (5, 5)];
const SQUARE_6: [(usize, usize); 8] = [
    (1, 2),
    (1, 6),
    (2, 4),
    (3, 1),
    (4, 3),
    (4, 6),
    (6, 2),
    (6, 5),
];
