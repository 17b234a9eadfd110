//! The symplectic space of boundary colorings and its Lagrangian subspaces.
//!
//! Boundary colorings with vanishing alternating sum are written in the
//! basis `f_k = e_k + e_{k+1}`, `k = 1..2n-1`. The form pairs neighbours:
//! `φ(f_i, f_{i+1}) = 1`. Its radical is spanned by the monochromatic vector
//! `m = f_1 + f_3 + ... + f_{2n-1}`; reducing by `m` kills the last
//! coordinate and leaves a nondegenerate form `φ̂` on `(F_p)^{2n-2}`.

use serde::Serialize;

use crate::coloring::{boundary_image, is_prime};
use crate::diagram::Tangle;
use crate::error::{Error, Result};
use crate::linalg;

/// Largest number of candidate subspaces [`enumerate_lagrangians`] will scan.
pub const ENUMERATION_GUARD: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticSpace {
    pub p: u64,
    pub n: usize,
}

impl SymplecticSpace {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n = {n} < 2")));
        }
        Ok(SymplecticSpace { p, n })
    }

    /// Dimension `2n - 2` of the reduced space.
    pub fn dim(&self) -> usize {
        2 * self.n - 2
    }

    /// `f_k` (1-based) in f-coordinates of length `2n - 1`.
    pub fn f(&self, k: usize) -> Vec<u64> {
        let mut v = vec![0; 2 * self.n - 1];
        v[k - 1] = 1;
        v
    }

    /// The monochromatic vector in f-coordinates.
    pub fn monochromatic(&self) -> Vec<u64> {
        (0..2 * self.n - 1).map(|i| u64::from(i % 2 == 0)).collect()
    }

    /// `φ` on f-coordinates (length `2n-1`) or `φ̂` on reduced ones (length `2n-2`).
    pub fn form_value(&self, u: &[u64], v: &[u64]) -> Result<u64> {
        let len = u.len();
        if (len != 2 * self.n - 1 && len != 2 * self.n - 2) || v.len() != len {
            return Err(Error::DimensionMismatch { expected: 2 * self.n - 1, got: len.max(v.len()) });
        }
        let p = self.p;
        let mut s = 0;
        for i in 0..len - 1 {
            s = (s + u[i] % p * (v[i + 1] % p) + (p - u[i + 1] % p) * (v[i] % p)) % p;
        }
        Ok(s)
    }

    /// f-coordinates of a boundary coloring `a` with vanishing alternating sum.
    pub fn f_coordinates(&self, a: &[u64]) -> Result<Vec<u64>> {
        let p = self.p;
        if a.len() != 2 * self.n {
            return Err(Error::DimensionMismatch { expected: 2 * self.n, got: a.len() });
        }
        let mut c = vec![0u64; 2 * self.n - 1];
        c[0] = a[0] % p;
        for k in 1..2 * self.n - 1 {
            c[k] = (a[k] % p + p - c[k - 1]) % p;
        }
        if c[2 * self.n - 2] != a[2 * self.n - 1] % p {
            return Err(Error::InvalidParameter("alternating sum is not zero".into()));
        }
        Ok(c)
    }

    /// Reduce f-coordinates modulo the monochromatic vector.
    pub fn reduce(&self, c: &[u64]) -> Vec<u64> {
        let p = self.p;
        let t = c[c.len() - 1] % p;
        let m = self.monochromatic();
        c[..c.len() - 1].iter().zip(&m).map(|(&x, &y)| (x + (p - t) * y) % p).collect()
    }
}

/// A subspace of the reduced space, stored in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SymplecticSubspace {
    pub p: u64,
    pub n: usize,
    pub basis: Vec<Vec<u64>>,
}

impl SymplecticSubspace {
    pub fn new(space: SymplecticSpace, rows: Vec<Vec<u64>>) -> Result<Self> {
        let d = space.dim();
        if let Some(r) = rows.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: r.len() });
        }
        let mut basis: Vec<Vec<u64>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % space.p).collect()).collect();
        linalg::rref(&mut basis, space.p);
        Ok(SymplecticSubspace { p: space.p, n: space.n, basis })
    }

    pub fn space(&self) -> SymplecticSpace {
        SymplecticSpace { p: self.p, n: self.n }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_isotropic(&self) -> bool {
        let s = self.space();
        self.basis
            .iter()
            .enumerate()
            .all(|(i, u)| self.basis[i + 1..].iter().all(|v| s.form_value(u, v) == Ok(0)))
    }

    pub fn is_lagrangian(&self) -> bool {
        self.dim() == self.n - 1 && self.is_isotropic()
    }
}

/// `∏_{i=1}^{n-1} (p^i + 1)`.
pub fn lagrangian_count(n: usize, p: u64) -> Result<u128> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} < 2")));
    }
    Ok((1..n as u32).map(|i| (p as u128).pow(i) + 1).product())
}

fn choose_pivots(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..d {
            cur.push(c);
            go(c + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, k, &mut Vec::new(), &mut out);
    out
}

/// Free positions of an echelon form with the given pivots.
fn free_slots(pivots: &[usize], d: usize) -> Vec<(usize, usize)> {
    pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &pc)| (pc + 1..d).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
        .collect()
}

/// Every Lagrangian subspace, by scanning all echelon forms of dimension `n-1`.
pub fn enumerate_lagrangians(space: SymplecticSpace) -> Result<Vec<SymplecticSubspace>> {
    let (d, k, p) = (space.dim(), space.n - 1, space.p);
    let shapes: Vec<(Vec<usize>, Vec<(usize, usize)>)> =
        choose_pivots(d, k).into_iter().map(|pv| { let f = free_slots(&pv, d); (pv, f) }).collect();
    let total: u128 = shapes.iter().map(|(_, f)| (p as u128).saturating_pow(f.len() as u32)).sum();
    if total > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded(total));
    }
    let mut out = Vec::new();
    for (pivots, free) in shapes {
        let count = p.pow(free.len() as u32);
        for code in 0..count {
            let mut rows = vec![vec![0u64; d]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = c % p;
                c /= p;
            }
            let w = SymplecticSubspace { p, n: space.n, basis: rows };
            if w.is_isotropic() {
                out.push(w);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The reduced boundary image of `Col_p(t)`.
pub fn tangle_lagrangian(t: &Tangle, p: u64) -> Result<SymplecticSubspace> {
    let space = SymplecticSpace::new(p, t.arity())?;
    let image = boundary_image(t, p)?;
    let rows = image
        .image_basis
        .iter()
        .map(|a| space.f_coordinates(a).map(|c| space.reduce(&c)))
        .collect::<Result<Vec<_>>>()?;
    SymplecticSubspace::new(space, rows)
}
