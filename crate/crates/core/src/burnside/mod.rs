//! Burnside quotients `B_L(p)` of links, seen through the lower central
//! series of the double branched cover's fundamental group modulo `p`-th
//! powers, up to class 3.
//!
//! The quotient is computed inside the group of unipotents of the
//! truncated free associative algebra over `F_p`. Modulo words of length
//! 4 this is the free group modulo its fourth mod-`p` dimension subgroup,
//! which for `p ≥ 3` and class ≤ 3 agrees with the lower exponent-`p`
//! central series.

mod algebra;
mod lie;
mod presentation;
mod sift;

use serde::Serialize;

pub use lie::{lie_quotient, GradedLieQuotient};
pub use presentation::{core_group, double_cover_presentation, reduce, GroupPresentation, Letter, Word};

use crate::diagram::Diagram;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurnsideReport {
    pub p: u64,
    pub class_bound: usize,
    pub dims: Vec<usize>,
    /// `log_p |B_L(3)|`; class 3 is exact only for exponent 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_exponent: Option<usize>,
    pub reference_dims: Vec<usize>,
    pub obstruction: bool,
}

/// Graded dimensions of the free Burnside group of rank `r` up to class 3.
pub fn reference_dims(r: usize, p: u64) -> Vec<usize> {
    if p == 3 {
        vec![r, r * r.saturating_sub(1) / 2, r * r.saturating_sub(1) * r.saturating_sub(2) / 6]
    } else {
        vec![r, r * r.saturating_sub(1) / 2, (r * r * r - r) / 3]
    }
}

/// Class-3 report for `d`, killing the first arc generator.
pub fn burnside_report(d: &Diagram, p: u64) -> Result<BurnsideReport> {
    burnside_report_killing(d, p, 0)
}

pub fn burnside_report_killing(d: &Diagram, p: u64, kill: usize) -> Result<BurnsideReport> {
    let g = double_cover_presentation(&core_group(d), kill)?;
    let q = lie_quotient(&g, p, 3)?;
    Ok(report_from(&q))
}

pub fn report_from(q: &GradedLieQuotient) -> BurnsideReport {
    let reference = reference_dims(q.dims[0], q.p);
    let reference = reference[..q.dims.len()].to_vec();
    let obstruction = q.dims.iter().zip(&reference).skip(1).any(|(a, b)| a != b);
    BurnsideReport {
        p: q.p,
        class_bound: q.class_bound,
        dims: q.dims.clone(),
        order_exponent: (q.p == 3 && q.class_bound == 3).then(|| q.dims.iter().sum()),
        reference_dims: reference,
        obstruction,
    }
}

#[cfg(test)]
mod tests;
