//! Fox colorings, the boundary map of a tangle, and the determinant.
//!
//! A `k`-coloring assigns an element of `Z_k` to every arc so that at each
//! crossing the two under-arcs sum to twice the over-arc.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::diagram::{Crossing, Diagram, Label, LabelUnion, Tangle};
use crate::linalg::{self, smith};

/// The relation matrix of a set of crossings. Labels are grouped into arcs
/// (over-strand segments); `loose` extra arcs carry no relation.
#[derive(Clone, Debug)]
pub struct Relations {
    pub rows: Vec<Vec<i64>>,
    pub arc_of: BTreeMap<Label, usize>,
    pub arcs: usize,
}

impl Relations {
    pub fn new(crossings: &[Crossing], boundary: &[Label], loose: usize) -> Self {
        let mut uf = LabelUnion::default();
        for c in crossings {
            uf.union(c.ends[1], c.ends[3]);
        }
        for &l in boundary {
            uf.find(l);
        }
        let mut arc_of = BTreeMap::new();
        let mut root_id: BTreeMap<Label, usize> = BTreeMap::new();
        let labels: std::collections::BTreeSet<Label> =
            crossings.iter().flat_map(|c| c.ends).chain(boundary.iter().copied()).collect();
        for l in labels {
            let r = uf.find(l);
            let next = root_id.len();
            arc_of.insert(l, *root_id.entry(r).or_insert(next));
        }
        let arcs = root_id.len() + loose;
        let rows = crossings
            .iter()
            .map(|c| {
                let mut row = vec![0i64; arcs];
                row[arc_of[&c.ends[1]]] += 2;
                row[arc_of[&c.ends[0]]] -= 1;
                row[arc_of[&c.ends[2]]] -= 1;
                row
            })
            .collect();
        Relations { rows, arc_of, arcs }
    }

    pub fn of_diagram(d: &Diagram) -> Self {
        Relations::new(d.crossings(), &[], d.free_loops())
    }

    pub fn of_tangle(t: &Tangle) -> Self {
        Relations::new(t.crossings(), t.boundary(), t.free_loops())
    }

    fn mod_p(&self, p: u64) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect()
    }
}

/// The group `Col_k` of `k`-colorings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringSpace {
    pub modulus: u64,
    /// Number of arcs, free loops included.
    pub ambient_dim: usize,
    /// One generator per cyclic factor, as arc vectors over `Z_k`.
    pub basis: Vec<Vec<u64>>,
    /// Orders of the cyclic factors, each a divisor of `k` greater than 1, ascending.
    pub cyclic_factors: Vec<u64>,
}

impl ColoringSpace {
    pub fn cardinality(&self) -> BigUint {
        self.cyclic_factors.iter().map(|&f| BigUint::from(f)).product()
    }

    /// Minimal number of generators.
    pub fn dim(&self) -> usize {
        self.cyclic_factors.len()
    }

    /// `log_k` of the cardinality when it is a power of `k`.
    pub fn log_modulus(&self) -> Option<usize> {
        self.cyclic_factors.iter().all(|&f| f == self.modulus).then_some(self.cyclic_factors.len())
    }

    /// Cardinality as a product of prime powers, e.g. `5^3` or `2^3*3`.
    pub fn factored(&self) -> String {
        let mut primes: BTreeMap<u64, u32> = BTreeMap::new();
        for &f in &self.cyclic_factors {
            let mut f = f;
            let mut q = 2;
            while f > 1 {
                while f % q == 0 {
                    *primes.entry(q).or_default() += 1;
                    f /= q;
                }
                q += 1;
            }
        }
        if primes.is_empty() {
            return "1".to_string();
        }
        primes
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Whether an arc vector satisfies every crossing relation mod `k`.
    pub fn satisfies(rel: &Relations, v: &[u64], k: u64) -> bool {
        rel.rows
            .iter()
            .all(|r| r.iter().zip(v).map(|(&a, &x)| a * x as i64).sum::<i64>().rem_euclid(k as i64) == 0)
    }
}

fn space_of(rel: &Relations, k: u64) -> ColoringSpace {
    let s = smith(&rel.rows, rel.arcs);
    let kb = BigInt::from(k);
    let mut gens: Vec<(u64, Vec<u64>)> = Vec::new();
    for i in 0..rel.arcs {
        let g = if i < s.rank() { s.diag[i].gcd(&kb).to_u64().expect("divides k") } else { k };
        if g == 1 {
            continue;
        }
        let scale = BigInt::from(k / g);
        let v = (0..rel.arcs)
            .map(|r| (&s.v[r][i] * &scale).mod_floor(&kb).to_u64().expect("reduced"))
            .collect();
        gens.push((g, v));
    }
    gens.sort_by_key(|(g, _)| *g);
    ColoringSpace {
        modulus: k,
        ambient_dim: rel.arcs,
        cyclic_factors: gens.iter().map(|(g, _)| *g).collect(),
        basis: gens.into_iter().map(|(_, v)| v).collect(),
    }
}

/// `Col_k(d)` via the Smith form of the integer relation matrix.
pub fn coloring_space(d: &Diagram, k: u64) -> crate::Result<ColoringSpace> {
    if k < 2 {
        return Err(crate::Error::InvalidParameter(format!("modulus {k} < 2")));
    }
    Ok(space_of(&Relations::of_diagram(d), k))
}

/// `Col_k(t)` for a tangle.
pub fn tangle_coloring_space(t: &Tangle, k: u64) -> crate::Result<ColoringSpace> {
    if k < 2 {
        return Err(crate::Error::InvalidParameter(format!("modulus {k} < 2")));
    }
    Ok(space_of(&Relations::of_tangle(t), k))
}

/// `col_k(d)`.
pub fn col(d: &Diagram, k: u64) -> BigUint {
    space_of(&Relations::of_diagram(d), k).cardinality()
}

/// Image of `Col_p(T)` in the boundary colors `(F_p)^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryColoringSpace {
    pub p: u64,
    pub n: usize,
    /// Reduced row echelon basis of the image.
    pub image_basis: Vec<Vec<u64>>,
    /// Dimension of the colorings vanishing on the boundary.
    pub kernel_dim: usize,
}

impl BoundaryColoringSpace {
    pub fn dim(&self) -> usize {
        self.image_basis.len()
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// The boundary map `ψ` of a tangle, over `F_p`.
pub fn boundary_image(t: &Tangle, p: u64) -> crate::Result<BoundaryColoringSpace> {
    if !is_prime(p) {
        return Err(crate::Error::InvalidParameter(format!("{p} is not prime")));
    }
    let rel = Relations::of_tangle(t);
    let kernel = linalg::kernel(&rel.mod_p(p), rel.arcs, p);
    let mut image: Vec<Vec<u64>> =
        kernel.iter().map(|v| t.boundary().iter().map(|l| v[rel.arc_of[l]]).collect()).collect();
    linalg::rref(&mut image, p);
    Ok(BoundaryColoringSpace { p, n: t.arity(), kernel_dim: kernel.len() - image.len(), image_basis: image })
}

/// Order of `H_1` of the double branched cover; 0 when it is infinite.
pub fn determinant(d: &Diagram) -> BigUint {
    let rel = Relations::of_diagram(d);
    let s = smith(&rel.rows, rel.arcs);
    if rel.arcs - s.rank() != 1 {
        return BigUint::zero();
    }
    s.diag.iter().map(|x| x.magnitude().clone()).product::<BigUint>().max(BigUint::one())
}

/// Nonunit invariant factors of the relation matrix; a 0 entry per extra free summand.
pub fn homology_factors(d: &Diagram) -> Vec<BigUint> {
    let rel = Relations::of_diagram(d);
    let s = smith(&rel.rows, rel.arcs);
    let mut out: Vec<BigUint> = s.diag.iter().map(|x| x.magnitude().clone()).filter(|x| !x.is_one()).collect();
    out.extend(std::iter::repeat_n(BigUint::zero(), (rel.arcs - s.rank()).saturating_sub(1)));
    out
}
