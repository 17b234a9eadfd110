use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Smith form `U A V = diag(d_1, ..., d_r, 0, ...)` with `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Nonzero invariant factors, positive and ascending by divisibility.
    pub diag: Vec<BigInt>,
    /// Column transform `V`, `cols × cols`, unimodular.
    pub v: Vec<Vec<BigInt>>,
    pub cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub fn smith(a: &[Vec<i64>], cols: usize) -> Smith {
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = m.len();
    let mut v: Vec<Vec<BigInt>> =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        swap_cols(&mut m, t, bj);
        swap_cols(&mut v, t, bj);
        let mut clean = true;
        for i in t + 1..rows {
            if !m[i][t].is_zero() {
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let s = &q * &m[t][j];
                    m[i][j] -= s;
                }
                clean &= m[i][t].is_zero();
            }
        }
        for j in t + 1..cols {
            if !m[t][j].is_zero() {
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..rows {
                    let s = &q * &m[i][t];
                    m[i][j] -= s;
                }
                for row in v.iter_mut() {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                clean &= m[t][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold an offending row into row t and retry
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &m[t][t]).is_zero()));
        if let Some(i) = bad {
            for j in t..cols {
                let x = m[i][j].clone();
                m[t][j] += x;
            }
            continue;
        }
        if m[t][t].is_negative() {
            for j in t..cols {
                m[t][j] = -m[t][j].clone();
            }
        }
        t += 1;
    }
    let diag = (0..t).map(|i| m[i][i].clone()).collect();
    Smith { diag, v, cols }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}
