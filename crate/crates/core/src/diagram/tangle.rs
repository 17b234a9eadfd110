//! Tangles in a disk with `2n` boundary points.
//!
//! Boundary positions run counterclockwise. For `n = 2` they are
//! NW, SW, SE, NE. In general the left side holds positions `0..n` from top
//! to bottom and the right side `n..2n` from bottom to top.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{faces, glue, Crossing, Diagram, Label};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tangle {
    crossings: Vec<Crossing>,
    boundary: Vec<Label>,
    #[serde(default)]
    free_loops: usize,
}

impl Tangle {
    pub fn new(crossings: Vec<Crossing>, boundary: Vec<Label>, free_loops: usize) -> Result<Self> {
        let t = Tangle { crossings, boundary, free_loops };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let b = self.boundary.len();
        if b == 0 || b % 2 == 1 {
            return Err(Error::InvalidTangle(format!("boundary has {b} points")));
        }
        let mut count: BTreeMap<Label, usize> = BTreeMap::new();
        for &l in self.crossings.iter().flat_map(|c| c.ends.iter()).chain(&self.boundary) {
            *count.entry(l).or_default() += 1;
        }
        if let Some((&label, &count)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(Error::NonMatchingArc { label, count });
        }
        // the outside of the disk is one more vertex, seen from the other side
        let mut verts: Vec<Vec<Label>> = self.crossings.iter().map(|c| c.ends.to_vec()).collect();
        verts.push(self.boundary.iter().rev().copied().collect());
        if !faces::rotation_is_planar(&verts) {
            return Err(Error::InvalidTangle("not planar in the disk".into()));
        }
        Ok(())
    }

    /// Half the number of boundary points.
    pub fn arity(&self) -> usize {
        self.boundary.len() / 2
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn boundary(&self) -> &[Label] {
        &self.boundary
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn max_label(&self) -> Label {
        self.crossings.iter().flat_map(|c| c.ends).chain(self.boundary.iter().copied()).max().unwrap_or(0)
    }

    /// Relabel by `l + offset`.
    pub fn shifted(&self, offset: Label) -> Tangle {
        Tangle {
            crossings: self.crossings.iter().map(|c| Crossing::new(c.ends.map(|l| l + offset))).collect(),
            boundary: self.boundary.iter().map(|l| l + offset).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Relabel 1, 2, ... in order of first appearance (crossings, then boundary).
    pub fn normalized(&self) -> Tangle {
        let mut map: HashMap<Label, Label> = HashMap::new();
        let mut f = |l: Label| {
            let next = map.len() as Label + 1;
            *map.entry(l).or_insert(next)
        };
        let crossings = self.crossings.iter().map(|c| Crossing::new(c.ends.map(&mut f))).collect();
        let boundary = self.boundary.iter().map(|&l| f(l)).collect();
        Tangle { crossings, boundary, free_loops: self.free_loops }
    }

    /// Trivial tangle: strand `k` joins position `k` to `2n-1-k`.
    pub fn zero(n: usize) -> Tangle {
        let mut boundary = vec![0; 2 * n];
        for k in 0..n {
            boundary[k] = k as Label + 1;
            boundary[2 * n - 1 - k] = k as Label + 1;
        }
        Tangle { crossings: Vec::new(), boundary, free_loops: 0 }
    }

    /// The `∞` tangle: NW joined to SW, SE to NE.
    pub fn infinity() -> Tangle {
        Tangle::zero(2).rotate(1)
    }

    /// A single crossing between strands `k` and `k+1` of [`Tangle::zero`].
    /// `positive` puts the strand from upper-left to lower-right on top.
    pub fn elementary(n: usize, k: usize, positive: bool) -> Result<Tangle> {
        if k + 1 >= n {
            return Err(Error::InvalidParameter(format!("no strand pair {k},{} in a {n}-tangle", k + 1)));
        }
        let mut t = Tangle::zero(n);
        let (ul, ll, lr, ur) = (k, k + 1, 2 * n - 2 - k, 2 * n - 1 - k);
        let labels: Vec<Label> = (1..=2 * n as Label).collect();
        t.boundary = labels.clone();
        for j in 0..n {
            if j != k && j != k + 1 {
                t.boundary[2 * n - 1 - j] = t.boundary[j];
            }
        }
        let ends = [labels[ll], labels[lr], labels[ur], labels[ul]];
        let c = if positive { ends } else { [ends[3], ends[0], ends[1], ends[2]] };
        t.crossings.push(Crossing::new(c));
        Ok(t.normalized())
    }

    /// Integer tangle `[m]`: `|m|` horizontal half twists.
    pub fn integer(m: i64) -> Tangle {
        let one = Tangle::elementary(2, 0, m >= 0).expect("2-tangle");
        let mut t = Tangle::zero(2);
        for _ in 0..m.unsigned_abs() {
            t = t.compose(&one).expect("same arity");
        }
        t
    }

    /// The rational tangle with fraction `p/q`; `q = 0` gives `∞`.
    pub fn rational(p: i64, q: i64) -> Result<Tangle> {
        if q == 0 {
            if p.abs() != 1 {
                return Err(Error::InvalidParameter(format!("{p}/0 is not reduced")));
            }
            return Ok(Tangle::infinity());
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParameter(format!("{p}/{q} is not reduced")));
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        let a0 = p.div_euclid(q);
        let r = p - a0 * q;
        if r == 0 {
            return Ok(Tangle::integer(a0));
        }
        let rest = Tangle::rational(q, r)?.mirror().rotate(1);
        Tangle::integer(a0).compose(&rest)
    }

    /// Boundary relabeled so that `new[k] = old[k + i]`.
    pub fn rotate(&self, i: isize) -> Tangle {
        let m = self.boundary.len() as isize;
        let boundary = (0..m).map(|k| self.boundary[(k + i).rem_euclid(m) as usize]).collect();
        Tangle { crossings: self.crossings.clone(), boundary, free_loops: self.free_loops }
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Tangle {
        Tangle {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            boundary: self.boundary.clone(),
            free_loops: self.free_loops,
        }
    }

    /// Horizontal sum: the right side of `self` glued to the left side of `other`.
    pub fn compose(&self, other: &Tangle) -> Result<Tangle> {
        let n = self.arity();
        if other.arity() != n {
            return Err(Error::ArityMismatch(n, other.arity()));
        }
        let b = other.shifted(self.max_label());
        let joins: Vec<(Label, Label)> = (0..n).map(|k| (self.boundary[2 * n - 1 - k], b.boundary[k])).collect();
        let mut boundary: Vec<Label> = self.boundary[..n].iter().chain(&b.boundary[n..]).copied().collect();
        let raw = self.crossings.iter().chain(&b.crossings).map(|c| c.ends).collect();
        let (crossings, lost) = glue(raw, &mut boundary, &joins);
        Ok(Tangle { crossings, boundary, free_loops: self.free_loops + other.free_loops + lost }.normalized())
    }

    fn close(&self, joins: Vec<(Label, Label)>) -> Diagram {
        let raw = self.crossings.iter().map(|c| c.ends).collect();
        let (crossings, lost) = glue(raw, &mut [], &joins);
        Diagram::from_parts_unchecked(crossings, self.free_loops + lost).normalized()
    }

    /// Numerator closure: position `k` joined to `2n-1-k`.
    pub fn numerator(&self) -> Diagram {
        let n = self.arity();
        self.close((0..n).map(|k| (self.boundary[k], self.boundary[2 * n - 1 - k])).collect())
    }

    /// Denominator closure: positions `2k` and `2k+1` joined.
    pub fn denominator(&self) -> Diagram {
        let n = self.arity();
        self.close((0..n).map(|k| (self.boundary[2 * k], self.boundary[2 * k + 1])).collect())
    }

    /// The link obtained by gluing two disks along their boundary:
    /// position `i` of `self` meets position `2n-1-i` of `other`.
    pub fn glue(&self, other: &Tangle) -> Result<Diagram> {
        let n = self.arity();
        if other.arity() != n {
            return Err(Error::ArityMismatch(n, other.arity()));
        }
        let b = other.shifted(self.max_label());
        let joins: Vec<(Label, Label)> = (0..2 * n).map(|i| (self.boundary[i], b.boundary[2 * n - 1 - i])).collect();
        let raw = self.crossings.iter().chain(&b.crossings).map(|c| c.ends).collect();
        let (crossings, lost) = glue(raw, &mut [], &joins);
        Ok(Diagram::from_parts_unchecked(crossings, self.free_loops + other.free_loops + lost).normalized())
    }

    /// Which boundary positions are joined by a strand, as `pair[i]`.
    pub fn connectivity(&self) -> Vec<usize> {
        let mut uf = super::LabelUnion::default();
        for c in &self.crossings {
            uf.union(c.ends[0], c.ends[2]);
            uf.union(c.ends[1], c.ends[3]);
        }
        let roots: Vec<Label> = self.boundary.iter().map(|&l| uf.find(l)).collect();
        (0..roots.len())
            .map(|i| (0..roots.len()).find(|&j| j != i && roots[j] == roots[i]).expect("strand has two ends"))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tangle serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: Tangle = serde_json::from_value(v.clone())
            .map_err(|e| Error::Malformed { line: 0, reason: e.to_string() })?;
        Tangle::new(raw.crossings, raw.boundary, raw.free_loops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_tangles_validate() {
        for t in [Tangle::zero(2), Tangle::infinity(), Tangle::integer(3), Tangle::integer(-2), Tangle::zero(4)] {
            Tangle::new(t.crossings.clone(), t.boundary.clone(), t.free_loops).unwrap();
        }
        for k in 0..3 {
            let t = Tangle::elementary(4, k, k % 2 == 0).unwrap();
            Tangle::new(t.crossings.clone(), t.boundary.clone(), 0).unwrap();
        }
    }

    #[test]
    fn closures_of_small_tangles() {
        assert_eq!(Tangle::zero(2).numerator(), Diagram::trivial(2));
        assert_eq!(Tangle::zero(2).denominator(), Diagram::unknot());
        assert_eq!(Tangle::infinity().numerator(), Diagram::unknot());
        let hopf = Tangle::integer(2).numerator();
        assert_eq!((hopf.crossing_count(), hopf.components()), (2, 2));
        let t = Tangle::integer(3).numerator();
        assert_eq!((t.crossing_count(), t.components()), (3, 1));
        assert_eq!(Tangle::integer(3).denominator().components(), 1);
    }

    #[test]
    fn wrong_boundary_order_is_not_planar() {
        // the elementary crossing with two boundary points swapped
        let t = Tangle::integer(1);
        let mut b = t.boundary().to_vec();
        b.swap(0, 1);
        assert!(Tangle::new(t.crossings().to_vec(), b, 0).is_err());
    }

    #[test]
    fn rational_tangles_have_expected_size() {
        let t = Tangle::rational(15, 4).unwrap();
        // 15/4 = 3 + 1/(1 + 1/3): 7 crossings
        assert_eq!(t.crossing_count(), 7);
        assert_eq!(t.numerator().components(), 1);
        assert!(Tangle::rational(4, 2).is_err());
    }

    #[test]
    fn compose_rejects_arity_mismatch() {
        assert_eq!(Tangle::zero(2).compose(&Tangle::zero(3)), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn rotation_by_full_turn_is_identity() {
        let t = Tangle::rational(5, 3).unwrap();
        assert_eq!(t.rotate(4), t);
        assert_eq!(t.rotate(1).rotate(-1), t);
    }

    #[test]
    fn connectivity_of_zero_and_infinity() {
        assert_eq!(Tangle::zero(2).connectivity(), vec![3, 2, 1, 0]);
        assert_eq!(Tangle::infinity().connectivity(), vec![1, 0, 3, 2]);
    }
}
