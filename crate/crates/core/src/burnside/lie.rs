use serde::Serialize;

use super::algebra::{Algebra, Elem, TOP};
use super::presentation::{GroupPresentation, Word};
use super::sift::Subgroup;
use crate::coloring::is_prime;
use crate::error::{Error, Result};

/// Graded pieces `L_w = γ_w/γ_{w+1}` of the class-`c` quotient of
/// `G/G^p`, as `F_p`-dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedLieQuotient {
    pub p: u64,
    pub class_bound: usize,
    pub dims: Vec<usize>,
    /// Hall commutators in the surviving generators spanning each `L_w`.
    pub basis: Vec<Vec<String>>,
    /// Leading terms of the relation subgroup per weight, as sparse rows
    /// `(monomial index, coefficient)` over the words of that length.
    pub relation_ideal: Vec<Vec<Vec<(usize, u64)>>>,
    /// Generators kept after eliminating the ones a relator solves for.
    pub free_generators: Vec<String>,
}

/// Elimination order: generators solved by a relator in which they occur
/// once, and the generators left free.
struct Plan {
    free: Vec<usize>,
    solve: Vec<(usize, usize)>,
    rest: Vec<usize>,
}

fn propagate(rels: &[Word], known: &mut [bool], used: &mut [bool], solve: &mut Vec<(usize, usize)>) -> usize {
    let mut gained = 0;
    loop {
        let mut changed = false;
        for (ri, r) in rels.iter().enumerate() {
            if used[ri] {
                continue;
            }
            let mut unknown = r.iter().filter(|l| !known[l.gen]).map(|l| l.gen);
            let Some(y) = unknown.next() else { continue };
            if unknown.all(|g| g == y) && r.iter().filter(|l| l.gen == y).count() == 1 {
                known[y] = true;
                used[ri] = true;
                solve.push((y, ri));
                gained += 1;
                changed = true;
            }
        }
        if !changed {
            return gained;
        }
    }
}

fn plan(g: &GroupPresentation) -> Plan {
    let n = g.generators.len();
    let rels = &g.relators;
    let mut known = vec![false; n];
    let mut used = vec![false; rels.len()];
    let mut solve = Vec::new();
    let mut free = Vec::new();
    loop {
        propagate(rels, &mut known, &mut used, &mut solve);
        let unknown: Vec<usize> = (0..n).filter(|&i| !known[i]).collect();
        if unknown.is_empty() {
            break;
        }
        // free the generator that lets the most others be solved
        let best = *unknown
            .iter()
            .max_by_key(|&&y| {
                let (mut k, mut u) = (known.clone(), used.clone());
                k[y] = true;
                (propagate(rels, &mut k, &mut u, &mut Vec::new()), std::cmp::Reverse(y))
            })
            .expect("nonempty");
        known[best] = true;
        free.push(best);
    }
    let rest = (0..rels.len()).filter(|&r| !used[r] && !rels[r].is_empty()).collect();
    Plan { free, solve, rest }
}

fn word_value(alg: &Algebra, vals: &[Option<Elem>], w: &[super::presentation::Letter]) -> Elem {
    w.iter().fold(alg.one(), |acc, l| {
        let v = vals[l.gen].as_ref().expect("known generator");
        if l.inverse {
            alg.mul(&acc, &alg.inv(v))
        } else {
            alg.mul(&acc, v)
        }
    })
}

/// Incremental row echelon form over `F_p`.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, r) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(r) {
                    *a = (*a + (p - c) * b) % p;
                }
            }
        }
        match v.iter().position(|&c| c != 0) {
            None => false,
            Some(piv) => {
                let inv = crate::linalg::inv_mod(v[piv], p);
                v.iter_mut().for_each(|a| *a = *a * inv % p);
                self.rows.push((piv, v));
                true
            }
        }
    }
}

/// Hall basis commutators of weight ≤ 3 on `m` generators, with labels.
fn hall_candidates(alg: &Algebra, names: &[String]) -> Vec<Vec<(String, Elem)>> {
    let m = alg.m;
    let x: Vec<Elem> = (0..m).map(|i| alg.gen(i)).collect();
    let mut out = vec![Vec::new(); TOP + 1];
    for i in 0..m {
        out[1].push((names[i].clone(), x[i].clone()));
    }
    for a in 0..m {
        for b in a + 1..m {
            let ba = alg.comm(&x[b], &x[a]);
            out[2].push((format!("[{},{}]", names[b], names[a]), ba.clone()));
            for c in a..m {
                out[3].push((format!("[[{},{}],{}]", names[b], names[a], names[c]), alg.comm(&ba, &x[c])));
            }
        }
    }
    out
}

/// `1 + ℓ³` for every linear form `ℓ` on at most three generators with
/// leading coefficient 1: the cubes whose span is every cube.
fn cube_elements(alg: &Algebra) -> Vec<Elem> {
    let m = alg.m;
    let p = alg.p;
    let mut forms: Vec<Vec<(usize, u64)>> = Vec::new();
    for i in 0..m {
        forms.push(vec![(i, 1)]);
        for j in i + 1..m {
            for cj in 1..p {
                forms.push(vec![(i, 1), (j, cj)]);
                for k in j + 1..m {
                    for ck in 1..p {
                        forms.push(vec![(i, 1), (j, cj), (k, ck)]);
                    }
                }
            }
        }
    }
    forms
        .into_iter()
        .map(|f| {
            let mut lin = alg.one();
            lin[0] = 0;
            for (i, c) in f {
                lin[alg.block(1).start + i] = c;
            }
            let cube = alg.mul(&alg.mul(&lin, &lin), &lin);
            alg.unit_plus(3, &cube[alg.block(3)])
        })
        .collect()
}

/// Class-`c` quotient of `G/G^p` for the group `g`, graded by the lower
/// central series. For `p = 3` the exponent law is imposed through cubes;
/// for `p ≥ 5` it has no effect below weight 4.
pub fn lie_quotient(g: &GroupPresentation, p: u64, c: usize) -> Result<GradedLieQuotient> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if p == 2 {
        return Err(Error::Unsupported("exponent 2 and 4 need class-5 machinery".into()));
    }
    if c > TOP {
        return Err(Error::Unsupported(format!("class bound {c} > {TOP}")));
    }
    if c == 0 {
        return Err(Error::InvalidParameter("class bound must be at least 1".into()));
    }
    if p >= 1 << 31 {
        return Err(Error::InvalidParameter(format!("prime {p} too large")));
    }
    let plan = plan(g);
    let m = plan.free.len();
    let alg = Algebra::new(p, m);
    let mut vals: Vec<Option<Elem>> = vec![None; g.generators.len()];
    for (k, &y) in plan.free.iter().enumerate() {
        vals[y] = Some(alg.gen(k));
    }
    for &(y, ri) in &plan.solve {
        let r = &g.relators[ri];
        let t = r.iter().position(|l| l.gen == y).expect("solved generator occurs");
        let pre = word_value(&alg, &vals, &r[..t]);
        let post = word_value(&alg, &vals, &r[t + 1..]);
        // pre · y^e · post = 1
        let ye = alg.mul(&alg.inv(&pre), &alg.inv(&post));
        vals[y] = Some(if r[t].inverse { alg.inv(&ye) } else { ye });
    }
    let x: Vec<Elem> = (0..m).map(|i| alg.gen(i)).collect();
    let mut ambient = Subgroup::new(&alg);
    ambient.close(x.clone(), &x);
    let mut rels: Vec<Elem> = plan.rest.iter().map(|&ri| word_value(&alg, &vals, &g.relators[ri])).collect();
    if p == 3 {
        rels.extend(cube_elements(&alg));
    }
    let mut n = Subgroup::new(&alg);
    n.close(rels, &x);

    let names: Vec<String> = plan.free.iter().map(|&i| g.generators[i].clone()).collect();
    let hall = hall_candidates(&alg, &names);
    let mut dims = Vec::new();
    let mut basis = Vec::new();
    let mut relation_ideal = Vec::new();
    for w in 1..=c {
        dims.push(ambient.lead_dim(w) - n.lead_dim(w));
        let mut ech = Echelon { p, rows: Vec::new() };
        let mut rows = Vec::new();
        for lead in n.leads(w) {
            ech.insert(lead);
            rows.push(lead.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect());
        }
        let r = alg.block(w);
        let labels: Vec<String> =
            hall[w].iter().filter(|(_, e)| ech.insert(&e[r.clone()])).map(|(s, _)| s.clone()).collect();
        debug_assert_eq!(labels.len(), *dims.last().unwrap());
        basis.push(labels);
        relation_ideal.push(rows);
    }
    Ok(GradedLieQuotient { p, class_bound: c, dims, basis, relation_ideal, free_generators: names })
}
