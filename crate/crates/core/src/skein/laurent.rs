use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::golden::GoldenValue;

/// Integer Laurent polynomial in `a` and `x`. Negative powers of `x` are
/// allowed since the loop value `δ = (a + a⁻¹)x⁻¹ - 1` needs them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), i64>,
}

/// One term `coeff · a^a · x^x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub a: i64,
    pub x: i64,
    pub coeff: i64,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, a: i64, x: i64) -> Self {
        let mut p = Self::default();
        p.add_term(a, x, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, a: i64, x: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((a, x)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(a, x));
        }
    }

    /// Terms sorted by `(a, x)`.
    pub fn terms(&self) -> Vec<Term> {
        self.terms.iter().map(|(&(a, x), &coeff)| Term { a, x, coeff }).collect()
    }

    pub fn coefficient(&self, a: i64, x: i64) -> i64 {
        self.terms.get(&(a, x)).copied().unwrap_or(0)
    }

    /// Multiply by `a^k`.
    pub fn shift_a(&self, k: i64) -> Self {
        LaurentPoly2 { terms: self.terms.iter().map(|(&(a, x), &c)| ((a + k, x), c)).collect() }
    }

    /// Substitute `a -> a⁻¹`.
    pub fn invert_a(&self) -> Self {
        LaurentPoly2 { terms: self.terms.iter().map(|(&(a, x), &c)| ((-a, x), c)).collect() }
    }

    /// Value at `a = 1`, `x = 2cos(2π/5)`.
    pub fn eval_phi5(&self) -> GoldenValue {
        self.terms.iter().fold(GoldenValue::zero(), |acc, (&(_, x), &c)| acc + GoldenValue::x_pow(x) * c)
    }

    /// Numeric value, for spot checks.
    pub fn eval_f64(&self, a: f64, x: f64) -> f64 {
        self.terms.iter().map(|(&(i, j), &c)| c as f64 * a.powi(i as i32) * x.powi(j as i32)).sum()
    }
}

impl Add for LaurentPoly2 {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for ((a, x), c) in o.terms {
            self.add_term(a, x, c);
        }
        self
    }
}

impl Neg for LaurentPoly2 {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly2 { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for LaurentPoly2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for LaurentPoly2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::default();
        for (&(a1, x1), &c1) in &self.terms {
            for (&(a2, x2), &c2) in &o.terms {
                out.add_term(a1 + a2, x1 + x2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|t| {
                let mut s = t.coeff.to_string();
                if t.a != 0 {
                    s.push_str(&format!("*a^{}", t.a));
                }
                if t.x != 0 {
                    s.push_str(&format!("*x^{}", t.x));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
