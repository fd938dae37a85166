//! Column-profile sweep for `F(P_n □ P_m)`.
//!
//! Selected vertices in the same column must be at least three rows apart,
//! in adjacent columns at least two rows apart, and two columns apart in
//! different rows. Columns three or more apart never conflict, so the masks
//! of the two most recent columns are a complete state.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Coord, Lattice};
use crate::packing::{audit, VertexSet};

use super::{Limits, SolveResult};

/// Hard ceiling imposed by the `u32` row masks.
const MASK_BITS: usize = 32;
const PAR_THRESHOLD: usize = 4096;

/// Row-subset bitmasks of the two most recent columns; bit `r - 1` stands for row `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnProfile {
    pub prev_mask: u32,
    pub cur_mask: u32,
}

impl ColumnProfile {
    /// Selected rows pairwise at least three apart.
    pub fn column_ok(mask: u32) -> bool {
        mask & (mask >> 1) == 0 && mask & (mask >> 2) == 0
    }

    /// Rows selected in neighboring columns differ by at least two.
    pub fn adjacent_ok(left: u32, right: u32) -> bool {
        right & (left | (left << 1) | (left >> 1)) == 0
    }

    pub fn new(prev_mask: u32, cur_mask: u32) -> Option<Self> {
        (Self::column_ok(prev_mask)
            && Self::column_ok(cur_mask)
            && Self::adjacent_ok(prev_mask, cur_mask))
        .then_some(ColumnProfile {
            prev_mask,
            cur_mask,
        })
    }

    /// Whether `next` may follow as the column after `cur_mask`.
    pub fn admits(&self, next: u32) -> bool {
        Self::column_ok(next)
            && Self::adjacent_ok(self.cur_mask, next)
            && self.prev_mask & next == 0
    }

    pub fn shift(&self, next: u32) -> Self {
        ColumnProfile {
            prev_mask: self.cur_mask,
            cur_mask: next,
        }
    }
}

struct Profiles {
    masks: Vec<u32>,
    states: Vec<ColumnProfile>,
    /// For each mask index `b`: `(c, state index of (b, c))` for every admissible `c`, ascending.
    next: Vec<Vec<(usize, usize)>>,
    /// For each mask index `b`: state indices `(a, b)`.
    prev: Vec<Vec<usize>>,
    /// `Σ_{r∈C} (1 + row-direction degree of r)`.
    base_weight: Vec<u32>,
}

impl Profiles {
    fn build(rows: usize) -> Self {
        let masks: Vec<u32> = (0u32..(1u32 << rows))
            .filter(|&m| ColumnProfile::column_ok(m))
            .collect();
        let mut states = Vec::new();
        let mut next = vec![Vec::new(); masks.len()];
        let mut prev = vec![Vec::new(); masks.len()];
        for (bi, &b) in masks.iter().enumerate() {
            for (ci, &c) in masks.iter().enumerate() {
                if ColumnProfile::adjacent_ok(b, c) {
                    let s = states.len();
                    states.push(ColumnProfile {
                        prev_mask: b,
                        cur_mask: c,
                    });
                    next[bi].push((ci, s));
                    prev[ci].push(s);
                }
            }
        }
        let row_deg = |r: usize| usize::from(r > 1) + usize::from(r < rows);
        let base_weight = masks
            .iter()
            .map(|&m| {
                (1..=rows)
                    .filter(|r| m >> (r - 1) & 1 == 1)
                    .map(|r| 1 + row_deg(r) as u32)
                    .sum()
            })
            .collect();
        Profiles {
            masks,
            states,
            next,
            prev,
            base_weight,
        }
    }

    fn mask_index(&self, m: u32) -> usize {
        self.masks.binary_search(&m).expect("valid mask")
    }

    fn weight(&self, ci: usize, col: usize, cols: usize) -> u32 {
        let col_deg = u32::from(col > 1) + u32::from(col < cols);
        self.base_weight[ci] + self.masks[ci].count_ones() * col_deg
    }

    /// Best gain over admissible next columns, as `(value, chosen state, transitions scanned)`.
    fn best_step(&self, s: usize, col: usize, cols: usize, later: &[u32]) -> (u32, usize, u64) {
        let st = self.states[s];
        let bi = self.mask_index(st.cur_mask);
        let mut best = (0u32, usize::MAX);
        let mut scanned = 0u64;
        for &(ci, t) in &self.next[bi] {
            scanned += 1;
            if st.prev_mask & self.masks[ci] != 0 {
                continue;
            }
            let v = self.weight(ci, col, cols) + later[t];
            // strict: the first (smallest) mask wins ties
            if best.1 == usize::MAX || v > best.0 {
                best = (v, t);
            }
        }
        (best.0, best.1, scanned)
    }

    fn state_index(&self, p: ColumnProfile) -> usize {
        let bi = self.mask_index(p.prev_mask);
        let ci = self.mask_index(p.cur_mask);
        self.next[bi]
            .iter()
            .find(|&&(c, _)| c == ci)
            .expect("valid profile")
            .1
    }
}

fn check_width(rows: usize, cols: usize, limits: &Limits) -> Result<()> {
    Lattice::rect(rows, cols)?;
    let limit = limits.max_width.min(MASK_BITS);
    if rows > limit {
        return Err(Error::LimitExceeded {
            what: "profile width (rows)",
            actual: rows,
            limit,
            hint: "transpose the grid so the shorter side is the profile, or raise the width limit",
        });
    }
    Ok(())
}

fn layer_map<F>(n: usize, f: F) -> Vec<(u32, usize, u64)>
where
    F: Fn(usize) -> (u32, usize, u64) + Sync + Send,
{
    if n >= PAR_THRESHOLD {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

/// `F(P_cols □ P_rows)` with a witness: the lexicographically smallest
/// sequence of column masks among all optima.
pub fn dp_f_rect(rows: usize, cols: usize, limits: &Limits) -> Result<SolveResult> {
    check_width(rows, cols, limits)?;
    let start = Instant::now();
    let p = Profiles::build(rows);
    let ns = p.states.len();

    // suffix[j][s]: best gain from columns j+1..=cols given profile s at column j
    let mut suffix = vec![vec![0u32; ns]; cols + 1];
    let mut explored = 0u64;
    for j in (1..cols).rev() {
        let later = &suffix[j + 1];
        let layer = layer_map(ns, |s| p.best_step(s, j + 1, cols, later));
        explored += layer.iter().map(|x| x.2).sum::<u64>();
        suffix[j] = layer.into_iter().map(|x| x.0).collect();
    }

    let mut state = p.state_index(ColumnProfile {
        prev_mask: 0,
        cur_mask: 0,
    });
    let mut witness = VertexSet::new();
    let mut total = 0;
    for j in 0..cols {
        let (gain, t, scanned) = p.best_step(state, j + 1, cols, &suffix[j + 1]);
        if j == 0 {
            total = gain;
            explored += scanned;
        }
        state = t;
        let mask = p.states[t].cur_mask;
        for r in 1..=rows {
            if mask >> (r - 1) & 1 == 1 {
                witness.insert(Coord::new(r, j + 1));
            }
        }
    }
    let f_value = total as usize;

    let lat = Lattice::rect(rows, cols)?;
    let report = audit(&lat, &witness)?;
    assert!(
        report.is_two_packing && report.influence == f_value,
        "witness failed its audit"
    );
    Ok(SolveResult {
        f_value,
        witness,
        explored,
        elapsed: start.elapsed(),
    })
}

/// Value-only sweep keeping two layers of state values.
pub fn dp_f_rect_value(rows: usize, cols: usize, limits: &Limits) -> Result<usize> {
    check_width(rows, cols, limits)?;
    let p = Profiles::build(rows);
    let ns = p.states.len();
    const NONE: i64 = i64::MIN;

    let mut value = vec![NONE; ns];
    let zero = p.mask_index(0);
    for &(ci, s) in &p.next[zero] {
        value[s] = p.weight(ci, 1, cols) as i64;
    }
    for j in 2..=cols {
        let pull = |t: usize| {
            let target = p.states[t];
            let bi = p.mask_index(target.prev_mask);
            let ci = p.mask_index(target.cur_mask);
            let best = p.prev[bi]
                .iter()
                .filter(|&&s| p.states[s].prev_mask & target.cur_mask == 0)
                .map(|&s| value[s])
                .max()
                .unwrap_or(NONE);
            if best == NONE {
                NONE
            } else {
                best + p.weight(ci, j, cols) as i64
            }
        };
        value = if ns >= PAR_THRESHOLD {
            (0..ns).into_par_iter().map(pull).collect()
        } else {
            (0..ns).map(pull).collect()
        };
    }
    Ok(value.into_iter().max().unwrap_or(0).max(0) as usize)
}
