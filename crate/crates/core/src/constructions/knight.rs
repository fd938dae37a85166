//! Knight-move 2-packing of the `n x n` grid, `n ≥ 7`, and its void count.
//!
//! Seeds are placed in columns 1 and 2 as pairs `(i, 1), (i + 2, 2)` with
//! two empty rows between pairs, then along the bottom row every five
//! columns from an anchor `y` chosen by the last seed. Every seed then
//! spawns the ray `(i - k, j + 2k)` up to the boundary. All selected
//! vertices share the residue of `2i + j (mod 5)`, so the set is a
//! restriction of a perfect code of the infinite grid and its voids sit on
//! the four boundary lines.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Coord;
use crate::packing::VertexSet;

/// Where the last column-1/column-2 seed `x` lands, which fixes the bottom-row anchor `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LastVertexCase {
    /// `x = (n-2, 2)`, `y = (n, 3)`.
    SecondColumnTwoAbove,
    /// `x = (n-1, 2)`, `y = (n, 5)`.
    SecondColumnOneAbove,
    /// `x = (n-1, 1)`, `y = (n, 4)`.
    FirstColumnOneAbove,
    /// `x = (n, 1) = y`.
    FirstColumnBottom,
    /// `x = (n, 2) = y`.
    SecondColumnBottom,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnightPattern {
    pub n: usize,
    pub last_case: LastVertexCase,
    /// Column seeds followed by bottom-row seeds, in placement order.
    pub seeds: Vec<Coord>,
    /// Each seed with the ray it spawns (seed excluded).
    pub rays: Vec<(Coord, Vec<Coord>)>,
    pub full_set: VertexSet,
}

impl KnightPattern {
    /// Common value of `(2i + j) mod 5` over the pattern.
    pub fn residue(&self) -> usize {
        let first = self.seeds[0];
        (2 * first.i + first.j) % 5
    }
}

fn require_seven(n: usize, what: &str) -> Result<()> {
    if n < 7 {
        return Err(Error::Domain(format!(
            "{what} is defined for n >= 7, got {n}"
        )));
    }
    Ok(())
}

pub fn knight_construction(n: usize) -> Result<KnightPattern> {
    require_seven(n, "the knight construction")?;
    let mut seeds = Vec::new();

    let mut row = if n % 5 == 4 { 2 } else { 1 };
    while row <= n {
        seeds.push(Coord::new(row, 1));
        if row + 2 <= n {
            seeds.push(Coord::new(row + 2, 2));
        }
        row += 5;
    }

    let x = *seeds.last().expect("n >= 7 places a seed");
    let (last_case, y) = match (n - x.i, x.j) {
        (2, 2) => (LastVertexCase::SecondColumnTwoAbove, Coord::new(n, 3)),
        (1, 2) => (LastVertexCase::SecondColumnOneAbove, Coord::new(n, 5)),
        (1, 1) => (LastVertexCase::FirstColumnOneAbove, Coord::new(n, 4)),
        (0, 1) => (LastVertexCase::FirstColumnBottom, x),
        (0, 2) => (LastVertexCase::SecondColumnBottom, x),
        _ => {
            return Err(Error::Domain(format!(
                "knight construction for n = {n}: last seed {x} matches no bottom-row case"
            )))
        }
    };
    if y != x {
        seeds.push(y);
    }
    for t in 1..=n / 5 {
        let j = y.j + 5 * t;
        if j <= n {
            seeds.push(Coord::new(n, j));
        }
    }

    let rays: Vec<(Coord, Vec<Coord>)> = seeds
        .iter()
        .map(|&s| {
            let ray = (1..)
                .map_while(|k| {
                    (k < s.i && s.j + 2 * k <= n).then(|| Coord::new(s.i - k, s.j + 2 * k))
                })
                .collect();
            (s, ray)
        })
        .collect();

    let full_set = rays
        .iter()
        .flat_map(|(s, ray)| std::iter::once(*s).chain(ray.iter().copied()))
        .collect();
    Ok(KnightPattern {
        n,
        last_case,
        seeds,
        rays,
        full_set,
    })
}

/// Voids left by the knight construction on `P_n □ P_n`, with `k = ⌊n/5⌋`:
/// `4k` when `n ≡ 0, 1, 4 (mod 5)`, otherwise `n - k - 1`.
pub fn predicted_voids(n: usize) -> Result<usize> {
    require_seven(n, "the predicted void count")?;
    let k = n / 5;
    Ok(match n % 5 {
        0 | 1 | 4 => 4 * k,
        _ => n - k - 1,
    })
}

/// Lower bound on `F(P_n □ P_n)` from the knight construction.
pub fn lower_bound_f(n: usize) -> Result<usize> {
    require_seven(n, "the lower bound")?;
    Ok(n * n - predicted_voids(n)?)
}

/// Conjectured exact `F(P_n □ P_n)`; numerically the lower bound.
pub fn conjectured_f(n: usize) -> Result<usize> {
    require_seven(n, "the conjectured value")?;
    lower_bound_f(n)
}
