//! Subgroups of the truncated unipotent group, kept as one echelon table
//! per degree of the leading term.

use super::algebra::{Algebra, Elem, TOP};
use crate::linalg::inv_mod;

pub(crate) struct Subgroup<'a> {
    alg: &'a Algebra,
    /// `tables[d]` holds `(pivot, element)` pairs, pivot relative to block `d`.
    tables: Vec<Vec<(usize, Elem)>>,
}

impl<'a> Subgroup<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Subgroup { alg, tables: vec![Vec::new(); TOP + 1] }
    }

    /// `log_p` of the size of the leading-term space in degree `d`.
    pub fn lead_dim(&self, d: usize) -> usize {
        self.tables[d].len()
    }

    pub fn leads(&self, d: usize) -> impl Iterator<Item = &[u64]> {
        let r = self.alg.block(d);
        self.tables[d].iter().map(move |(_, e)| &e[r.clone()])
    }

    /// Reduce `h` by the tables. Returns the normalized remainder if it is
    /// not the identity, after adding it to the tables.
    fn sift(&mut self, mut h: Elem) -> Option<Elem> {
        let alg = self.alg;
        let p = alg.p;
        while let Some(d) = alg.degree(&h) {
            let base = alg.block(d).start;
            for (pivot, u) in &self.tables[d] {
                let c = h[base + pivot];
                if c != 0 {
                    h = alg.mul(&h, &alg.pow(u, p - c));
                }
            }
            if let Some(pivot) = h[alg.block(d)].iter().position(|&c| c != 0) {
                let c = h[base + pivot];
                let u = alg.pow(&h, inv_mod(c, p));
                self.tables[d].push((pivot, u.clone()));
                return Some(u);
            }
        }
        None
    }

    /// Close under products, `p`-th powers and commutators with `conj`
    /// (normal closure when `conj` generates the ambient group).
    pub fn close(&mut self, gens: Vec<Elem>, conj: &[Elem]) {
        let alg = self.alg;
        let mut queue = gens;
        while let Some(h) = queue.pop() {
            let Some(u) = self.sift(h) else { continue };
            let du = alg.degree(&u).expect("non-identity");
            if du * alg.p as usize <= TOP || (alg.p as usize) <= TOP {
                queue.push(alg.pow(&u, alg.p));
            }
            for d in 1..=TOP - du {
                for (_, v) in &self.tables[d] {
                    queue.push(alg.comm(&u, v));
                }
            }
            if du < TOP {
                for x in conj {
                    queue.push(alg.comm(&u, x));
                }
            }
        }
    }
}
