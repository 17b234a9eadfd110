//! Unipotent elements `1 + a` of `F_p⟨X_1..X_m⟩` modulo words of length ≥ 4.
//!
//! `x_i ↦ 1 + X_i` embeds the free group modulo its fourth mod-`p`
//! dimension subgroup; the leading homogeneous part of an element tracks
//! which filtration layer it lives in.

pub(crate) const TOP: usize = 3;

#[derive(Clone, Debug)]
pub(crate) struct Algebra {
    pub p: u64,
    pub m: usize,
    /// Start of each degree block; block `d` has `m^d` coordinates.
    off: [usize; TOP + 2],
}

/// Coefficient vector over all monomials of degree 0..=3.
pub(crate) type Elem = Vec<u64>;

impl Algebra {
    pub fn new(p: u64, m: usize) -> Self {
        let mut off = [0; TOP + 2];
        for d in 0..=TOP {
            off[d + 1] = off[d] + m.pow(d as u32);
        }
        Algebra { p, m, off }
    }

    pub fn len(&self) -> usize {
        self.off[TOP + 1]
    }

    pub fn block(&self, d: usize) -> std::ops::Range<usize> {
        self.off[d]..self.off[d + 1]
    }

    pub fn one(&self) -> Elem {
        let mut e = vec![0; self.len()];
        e[0] = 1;
        e
    }

    /// `1 + X_i`.
    pub fn gen(&self, i: usize) -> Elem {
        let mut e = self.one();
        e[self.off[1] + i] = 1;
        e
    }

    /// `1 + c` for a homogeneous `c` of degree `d` given on its block.
    pub fn unit_plus(&self, d: usize, c: &[u64]) -> Elem {
        let mut e = self.one();
        e[self.block(d)].copy_from_slice(c);
        e
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Elem {
        let p = self.p;
        let mut out = vec![0u64; self.len()];
        for da in 0..=TOP {
            let ra = self.block(da);
            for (ia, &ca) in a[ra.clone()].iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for db in 0..=TOP - da {
                    let rb = self.block(db);
                    let width = rb.len();
                    let base = self.off[da + db] + ia * width;
                    for (ib, &cb) in b[rb].iter().enumerate() {
                        if cb != 0 {
                            let t = &mut out[base + ib];
                            *t = (*t + ca * cb) % p;
                        }
                    }
                }
            }
        }
        out
    }

    /// `(1 + a)^k = Σ C(k, j) a^j` for `j ≤ 3`.
    pub fn pow(&self, u: &[u64], k: u64) -> Elem {
        let p = self.p;
        let mut a = u.to_vec();
        a[0] = 0;
        let mut out = self.one();
        let mut term = self.one();
        for j in 1..=TOP as u64 {
            if k < j {
                break;
            }
            term = self.mul(&term, &a);
            let c = (binomial(k, j) % p as u128) as u64;
            if c != 0 {
                for (o, t) in out.iter_mut().zip(&term) {
                    *o = (*o + c * t) % p;
                }
            }
        }
        out
    }

    /// `(1 + a)⁻¹ = 1 - a + a² - a³`.
    pub fn inv(&self, u: &[u64]) -> Elem {
        self.pow(u, self.p.pow(TOP as u32 + 1) - 1)
    }

    /// `[g, h] = g⁻¹h⁻¹gh`.
    pub fn comm(&self, g: &[u64], h: &[u64]) -> Elem {
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        self.mul(&self.inv(&hg), &gh)
    }

    /// Lowest degree ≥ 1 with a nonzero coefficient, `None` for the identity.
    pub fn degree(&self, u: &[u64]) -> Option<usize> {
        (1..=TOP).find(|&d| u[self.block(d)].iter().any(|&c| c != 0))
    }
}

fn binomial(k: u64, j: u64) -> u128 {
    (0..j).fold(1u128, |acc, i| acc * (k - i) as u128 / (i + 1) as u128)
}
