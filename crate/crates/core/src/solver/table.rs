use std::ops::RangeInclusive;

use serde::Serialize;

use crate::constructions::{conjectured_f, predicted_voids};
use crate::error::Result;

use super::{dp_f_rect_value, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// Above the sweep's width limit; no value is claimed.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub dp: Option<usize>,
    pub conjectured: usize,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VoidRow {
    pub n: usize,
    /// `n² - F(P_n □ P_n)` from the sweep.
    pub voids: Option<usize>,
    pub predicted: usize,
    pub status: RowStatus,
}

fn exact_square(n: usize, limits: &Limits) -> Result<Option<usize>> {
    if n > limits.max_width {
        return Ok(None);
    }
    dp_f_rect_value(n, n, limits).map(Some)
}

fn status(ok: Option<bool>) -> RowStatus {
    match ok {
        Some(true) => RowStatus::Match,
        Some(false) => RowStatus::Mismatch,
        None => RowStatus::Skipped,
    }
}

/// Compares the exact `F(P_n □ P_n)` with the closed-form conjecture, `n ≥ 7`.
pub fn check_conjecture(
    range: RangeInclusive<usize>,
    limits: &Limits,
) -> Result<Vec<ConjectureRow>> {
    range
        .map(|n| {
            let conjectured = conjectured_f(n)?;
            let dp = exact_square(n, limits)?;
            Ok(ConjectureRow {
                n,
                dp,
                conjectured,
                status: status(dp.map(|f| f == conjectured)),
            })
        })
        .collect()
}

/// Void counts `n² - F(P_n □ P_n)` next to the knight-pattern prediction, `n ≥ 7`.
pub fn table_voids(range: RangeInclusive<usize>, limits: &Limits) -> Result<Vec<VoidRow>> {
    range
        .map(|n| {
            let predicted = predicted_voids(n)?;
            let voids = exact_square(n, limits)?.map(|f| n * n - f);
            Ok(VoidRow {
                n,
                voids,
                predicted,
                status: status(voids.map(|v| v == predicted)),
            })
        })
        .collect()
}
