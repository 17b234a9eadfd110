//! Kauffman polynomial by skein recursion.
//!
//! `F(L₊) + F(L₋) = x (F(L₀) + F(L∞))`, a positive curl contributes `a`,
//! and a split unknot contributes `δ = (a + a⁻¹)x⁻¹ - 1`. At `a = 1` and
//! `x = 2cos(2π/5)` every link evaluates to `±√5^λ`.

mod golden;
mod kauffman;
mod laurent;

pub use golden::{decompose, GoldenValue, PhiDecomposition};
pub use kauffman::{
    eval_phi5, evaluate, kauffman_framed, kauffman_normalized, node_budget, SkeinRing, DEFAULT_NODE_BUDGET,
};
pub use laurent::{LaurentPoly2, Term};
