use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// `u + v·x` in `Z[x]/(x² + x - 1)`, where `x = (-1 + √5)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GoldenValue {
    pub u: i64,
    pub v: i64,
}

impl GoldenValue {
    pub const fn new(u: i64, v: i64) -> Self {
        GoldenValue { u, v }
    }

    pub const fn zero() -> Self {
        GoldenValue::new(0, 0)
    }

    pub const fn one() -> Self {
        GoldenValue::new(1, 0)
    }

    pub const fn x() -> Self {
        GoldenValue::new(0, 1)
    }

    /// `√5 = 2x + 1`.
    pub const fn sqrt5() -> Self {
        GoldenValue::new(1, 2)
    }

    /// `x⁻¹ = x + 1`.
    pub const fn x_inv() -> Self {
        GoldenValue::new(1, 1)
    }

    pub fn pow(self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self)
    }

    /// `x^k` for any integer `k`.
    pub fn x_pow(k: i64) -> Self {
        let base = if k < 0 { Self::x_inv() } else { Self::x() };
        base.pow(k.unsigned_abs() as u32)
    }

    pub fn to_f64(self) -> f64 {
        self.u as f64 + self.v as f64 * (5f64.sqrt() - 1.0) / 2.0
    }

    /// Field norm `N(u + vx) = u² - uv - v²`.
    pub fn norm(self) -> i64 {
        self.u * self.u - self.u * self.v - self.v * self.v
    }
}

impl Add for GoldenValue {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GoldenValue::new(self.u + o.u, self.v + o.v)
    }
}

impl Sub for GoldenValue {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GoldenValue::new(self.u - o.u, self.v - o.v)
    }
}

impl Neg for GoldenValue {
    type Output = Self;
    fn neg(self) -> Self {
        GoldenValue::new(-self.u, -self.v)
    }
}

impl Mul for GoldenValue {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // x² = 1 - x
        let (a, b, c, d) = (self.u, self.v, o.u, o.v);
        GoldenValue::new(a * c + b * d, a * d + b * c - b * d)
    }
}

impl Mul<i64> for GoldenValue {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        GoldenValue::new(self.u * k, self.v * k)
    }
}

impl fmt::Display for GoldenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u, self.v) {
            (u, 0) => write!(f, "{u}"),
            (0, v) => write!(f, "{v}x"),
            (u, v) if v < 0 => write!(f, "{u} - {}x", -v),
            (u, v) => write!(f, "{u} + {v}x"),
        }
    }
}

/// `g = ε·√5^λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhiDecomposition {
    pub epsilon: i8,
    pub lambda: u32,
}

fn log5(n: i64) -> Option<u32> {
    let mut n = n.checked_abs()?;
    let mut k = 0;
    if n == 0 {
        return None;
    }
    while n % 5 == 0 {
        n /= 5;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Split `g` as `ε·√5^λ`.
pub fn decompose(g: GoldenValue) -> Result<PhiDecomposition> {
    let sign = |u: i64| if u > 0 { 1 } else { -1 };
    if g.v == 0 {
        let k = log5(g.u).ok_or(Error::NotSqrt5Power)?;
        return Ok(PhiDecomposition { epsilon: sign(g.u), lambda: 2 * k });
    }
    // c(2x + 1) = c + 2c·x
    if g.v == 2 * g.u {
        let k = log5(g.u).ok_or(Error::NotSqrt5Power)?;
        return Ok(PhiDecomposition { epsilon: sign(g.u), lambda: 2 * k + 1 });
    }
    Err(Error::NotSqrt5Power)
}
