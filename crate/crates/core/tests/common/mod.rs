#![allow(dead_code)]

use linkforge::catalog::catalog;
use linkforge::moves::{apply, insertion_sites, Move, MoveKind, MoveSite};
use linkforge::{BraidWord, Diagram, Tangle};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small catalog entries, cheap enough for the skein recursion.
pub const SMALL: &[&str] = &["unknot", "T_2", "T_3", "hopf", "3_1", "4_1", "7_4", "whitehead", "borromean", "8_8"];

pub fn random_braid(r: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = r.gen_range(2..=max_strands);
    let len = r.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = r.gen_range(1..strands as i32);
            if r.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

/// A catalog entry or a small braid closure.
pub fn random_diagram(r: &mut impl Rng) -> Diagram {
    if r.gen_bool(0.5) {
        catalog(SMALL.choose(r).unwrap()).unwrap()
    } else {
        random_braid(r, 4, 7).closure()
    }
}

/// An insertion site of `d`, if it has one.
pub fn random_site(r: &mut impl Rng, d: &Diagram) -> Option<MoveSite> {
    insertion_sites(d).choose(r).cloned()
}

/// Apply an insertion move at a random site.
pub fn random_insertion(r: &mut impl Rng, d: &Diagram, kind: MoveKind) -> Option<Diagram> {
    let site = random_site(r, d)?;
    Some(apply(d, &Move::new(kind, site)).unwrap())
}

/// Every Reidemeister move that applies to `d`: R1 and R2 insertions at
/// each site, and R1-, R2-, R3 wherever the crossings allow.
pub fn reidemeister_moves(d: &Diagram) -> Vec<Move> {
    let mut out = Vec::new();
    for site in insertion_sites(d) {
        for sign in [1, -1] {
            out.push(Move::new(MoveKind::R2Plus { sign }, site.clone()));
        }
    }
    for edge in d.labels() {
        for face in 0..2 {
            for sign in [1, -1] {
                out.push(Move::new(MoveKind::R1Plus { sign }, MoveSite::Edges { first: edge, second: edge, face }));
            }
        }
    }
    let n = d.crossing_count();
    for i in 0..n {
        out.push(Move::new(MoveKind::R1Minus, MoveSite::Crossings { ids: vec![i] }));
        for j in i + 1..n {
            out.push(Move::new(MoveKind::R2Minus, MoveSite::Crossings { ids: vec![i, j] }));
            if n <= 12 {
                for k in j + 1..n {
                    out.push(Move::new(MoveKind::R3, MoveSite::Crossings { ids: vec![i, j, k] }));
                }
            }
        }
    }
    out.into_iter().filter(|m| apply(d, m).is_ok()).collect()
}

/// A random algebraic 2-tangle built from rational tangles by sums and rotations.
pub fn random_algebraic_tangle(r: &mut impl Rng) -> Tangle {
    let mut t = random_rational(r);
    for _ in 0..r.gen_range(0..3) {
        let other = random_rational(r);
        t = t.rotate(r.gen_range(0..2)).compose(&other).unwrap();
    }
    t
}

pub fn random_rational(r: &mut impl Rng) -> Tangle {
    let q = r.gen_range(1..5i64);
    let p = loop {
        let p = r.gen_range(-7..8i64);
        if num_integer::gcd(p, q) == 1 {
            break p;
        }
    };
    Tangle::rational(p, q).unwrap()
}
