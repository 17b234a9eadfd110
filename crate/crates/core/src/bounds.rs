//! Lower bounds on unknotting numbers and crossing-change distance.
//!
//! Everything here reads `F = ε·√5^λ`, the Kauffman polynomial at
//! `a = 1, x = 2cos(2π/5)`. A crossing change moves `λ` by at most one.

use serde::Serialize;
use serde_json::json;

use crate::diagram::iso::diagrams_isomorphic;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::moves::{verify_certificate, MoveCertificate};
use crate::skein::{decompose, eval_phi5, PhiDecomposition};

/// `(ε, λ)` of a diagram.
pub fn phi5_data(d: &Diagram) -> Result<PhiDecomposition> {
    decompose(eval_phi5(d)?)
}

fn knot_data(d: &Diagram) -> Result<PhiDecomposition> {
    match d.components() {
        1 => phi5_data(d),
        c => Err(Error::NotAKnot(c)),
    }
}

/// `u(K) ≥ λ(K)`.
pub fn wendt_bound(d: &Diagram) -> Result<u32> {
    Ok(knot_data(d)?.lambda)
}

/// `λ + 1` when `ε = -(-1)^λ`, else `λ`.
pub fn parity_bound(d: &Diagram) -> Result<u32> {
    let PhiDecomposition { epsilon, lambda } = knot_data(d)?;
    let wrong_sign = epsilon as i64 == -sign_pow(lambda as i64);
    Ok(lambda + wrong_sign as u32)
}

fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Bound from a reduction to the `n`-component trivial link by `k`
/// `±(2,2)`-moves: `n + ((-1)^(n-k) - 1)/2`.
pub fn certificate_bound(n: usize, k: usize) -> i64 {
    n as i64 + (sign_pow(n as i64 - k as i64) - 1) / 2
}

/// `|λ₂ - λ₁| + |ε₁ε₂ - (-1)^(λ₂-λ₁)| / 2`.
pub fn distance_bound(d1: &Diagram, d2: &Diagram) -> Result<u32> {
    let (a, b) = (phi5_data(d1)?, phi5_data(d2)?);
    let diff = b.lambda as i64 - a.lambda as i64;
    let sign_term = (a.epsilon as i64 * b.epsilon as i64 - sign_pow(diff)).abs() / 2;
    Ok((diff.abs() + sign_term) as u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSource {
    Wendt,
    Parity,
    Certificate,
    Distance,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bound {
    pub value: i64,
    pub source: BoundSource,
    pub inputs: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub subject: String,
    pub bounds: Vec<Bound>,
    pub best: i64,
}

impl BoundReport {
    /// Wendt and parity bounds for a knot. Links get an empty report to
    /// which certificate or distance bounds can be added.
    pub fn for_diagram(subject: &str, d: &Diagram) -> Result<BoundReport> {
        let mut r = BoundReport { subject: subject.to_string(), bounds: Vec::new(), best: 0 };
        if d.components() == 1 {
            let PhiDecomposition { epsilon, lambda } = knot_data(d)?;
            let inputs = json!({ "epsilon": epsilon, "lambda": lambda });
            r.push(lambda as i64, BoundSource::Wendt, inputs.clone());
            r.push(parity_bound(d)? as i64, BoundSource::Parity, inputs);
        }
        Ok(r)
    }

    /// Replay `c`; its start must be `d` up to relabeling and it must end
    /// on a crossing-free diagram.
    pub fn with_certificate(mut self, d: &Diagram, c: &MoveCertificate) -> Result<BoundReport> {
        let start = c.start.diagram()?;
        if !diagrams_isomorphic(&start.normalized(), &d.normalized()) {
            return Err(Error::InvalidParameter("certificate starts from a different diagram".into()));
        }
        let rep = verify_certificate(c)?;
        if rep.final_crossings != 0 {
            return Err(Error::InvalidParameter(format!(
                "certificate ends with {} crossings, not a trivial link",
                rep.final_crossings
            )));
        }
        let (n, k) = (rep.final_components, rep.two_two_moves);
        self.push(certificate_bound(n, k), BoundSource::Certificate, json!({ "n": n, "k": k }));
        Ok(self)
    }

    pub fn with_distance(mut self, d: &Diagram, other_name: &str, other: &Diagram) -> Result<BoundReport> {
        let v = distance_bound(d, other)?;
        self.push(v as i64, BoundSource::Distance, json!({ "against": other_name }));
        Ok(self)
    }

    fn push(&mut self, value: i64, source: BoundSource, inputs: serde_json::Value) {
        let value = value.max(0);
        self.best = self.best.max(value);
        self.bounds.push(Bound { value, source, inputs });
    }
}

/// `(ε, λ)` of the four members of a skein quadruple at one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadrupleCheck {
    pub plus: PhiDecomposition,
    pub minus: PhiDecomposition,
    pub zero: PhiDecomposition,
    pub infinity: PhiDecomposition,
    /// `λ(K₋) = λ(K₊) - 1`.
    pub hypothesis: bool,
    /// When the hypothesis holds: `-ε(K₋) = ε(K₊) = ε(K₀) = ε(K∞)` and
    /// `λ(K₀) = λ(K∞) = λ(K₋)`. Vacuously true otherwise.
    pub holds: bool,
}

/// Evaluate the propagation rule at crossing `i`.
pub fn skein_quadruple_check(d: &Diagram, i: usize) -> Result<QuadrupleCheck> {
    if i >= d.crossing_count() {
        return Err(Error::InvalidParameter(format!("no crossing {i}")));
    }
    let other = d.switch_crossing(i);
    let (plus, minus) = if d.crossing_signs()[i] > 0 { (d.clone(), other) } else { (other, d.clone()) };
    let (s0, s1) = d.smoothings(i);
    let [p, m, z, inf] = [&plus, &minus, &s0, &s1].map(phi5_data);
    let (plus, minus, zero, infinity) = (p?, m?, z?, inf?);
    let hypothesis = minus.lambda + 1 == plus.lambda;
    let conclusion = minus.epsilon == -plus.epsilon
        && zero.epsilon == plus.epsilon
        && infinity.epsilon == plus.epsilon
        && zero.lambda == minus.lambda
        && infinity.lambda == minus.lambda;
    Ok(QuadrupleCheck { plus, minus, zero, infinity, hypothesis, holds: !hypothesis || conclusion })
}
