//! Planar diagrams in PD notation.
//!
//! A crossing lists the labels of its four incident edges counterclockwise,
//! starting at an under-strand end. The over-strand is the (2nd, 4th) pair.
//! Every edge label occurs exactly twice; crossing-free circles are kept as a
//! counter.

pub mod braid;
pub mod catalog;
mod faces;
pub mod iso;
pub mod tangle;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use faces::{Dart, Face};
pub use tangle::Tangle;

/// Edge label. Labels are arbitrary; every operation is label-invariant.
pub type Label = i64;

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Crossing {
    pub ends: [Label; 4],
}

impl Crossing {
    pub fn new(ends: [Label; 4]) -> Self {
        Crossing { ends }
    }

    /// The over-strand edges.
    pub fn over(&self) -> (Label, Label) {
        (self.ends[1], self.ends[3])
    }

    /// The under-strand edges.
    pub fn under(&self) -> (Label, Label) {
        (self.ends[0], self.ends[2])
    }

    /// Same crossing with over and under exchanged.
    pub fn switched(&self) -> Self {
        let [a, b, c, d] = self.ends;
        Crossing::new([b, c, d, a])
    }

    fn canonical(&self) -> [Label; 4] {
        let [a, b, c, d] = self.ends;
        std::cmp::min([a, b, c, d], [c, d, a, b])
    }
}

/// A half turn of the list describes the same crossing.
impl PartialEq for Crossing {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for Crossing {}

impl std::hash::Hash for Crossing {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical().hash(state)
    }
}

/// An unoriented link diagram. Crossing ids are positions in [`Diagram::crossings`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Minimal union-find over labels.
#[derive(Default)]
pub(crate) struct LabelUnion {
    parent: HashMap<Label, Label>,
}

impl LabelUnion {
    pub(crate) fn find(&mut self, x: Label) -> Label {
        let p = *self.parent.entry(x).or_insert(x);
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent.insert(x, r);
        r
    }

    pub(crate) fn union(&mut self, a: Label, b: Label) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller label as root so results are deterministic
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }
}

/// Merge labels according to `joins`, relabel, and turn every merged class
/// that no longer occurs anywhere into a free loop.
///
/// `extra` lists labels occurring outside the crossings (tangle boundaries);
/// they are relabeled in place and count as occurrences.
pub(crate) fn glue(
    crossings: Vec<[Label; 4]>,
    extra: &mut [Label],
    joins: &[(Label, Label)],
) -> (Vec<Crossing>, usize) {
    let mut uf = LabelUnion::default();
    for &(a, b) in joins {
        uf.union(a, b);
    }
    let crossings: Vec<Crossing> = crossings
        .into_iter()
        .map(|ends| Crossing::new(ends.map(|l| uf.find(l))))
        .collect();
    for l in extra.iter_mut() {
        *l = uf.find(*l);
    }
    let mut present: BTreeSet<Label> = crossings.iter().flat_map(|c| c.ends).collect();
    present.extend(extra.iter().copied());
    let touched: BTreeSet<Label> = joins.iter().flat_map(|&(a, b)| [a, b]).map(|l| uf.find(l)).collect();
    let lost = touched.iter().filter(|l| !present.contains(l)).count();
    (crossings, lost)
}

impl Diagram {
    /// Build and validate a diagram.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = Diagram { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub fn from_pd<I: IntoIterator<Item = [Label; 4]>>(pd: I) -> Result<Self> {
        Diagram::new(pd.into_iter().map(Crossing::new).collect(), 0)
    }

    /// `n` crossing-free circles.
    pub fn trivial(n: usize) -> Self {
        Diagram { crossings: Vec::new(), free_loops: n }
    }

    pub fn unknot() -> Self {
        Diagram::trivial(1)
    }

    pub(crate) fn from_parts_unchecked(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Diagram { crossings, free_loops }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.free_loops == 0
    }

    /// Distinct edge labels in ascending order.
    pub fn labels(&self) -> Vec<Label> {
        let set: BTreeSet<Label> = self.crossings.iter().flat_map(|c| c.ends).collect();
        set.into_iter().collect()
    }

    pub fn max_label(&self) -> Label {
        self.crossings.iter().flat_map(|c| c.ends).max().unwrap_or(0)
    }

    fn validate(&self) -> Result<()> {
        let mut count: BTreeMap<Label, usize> = BTreeMap::new();
        for c in &self.crossings {
            for &l in &c.ends {
                *count.entry(l).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(Error::NonMatchingArc { label, count });
        }
        faces::check_planar(self)
    }

    /// Relabel edges 1, 2, ... in order of first appearance.
    pub fn normalized(&self) -> Diagram {
        let mut map: HashMap<Label, Label> = HashMap::new();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                Crossing::new(c.ends.map(|l| {
                    let next = map.len() as Label + 1;
                    *map.entry(l).or_insert(next)
                }))
            })
            .collect();
        Diagram { crossings, free_loops: self.free_loops }
    }

    /// Apply an arbitrary relabeling.
    pub fn relabeled(&self, f: impl Fn(Label) -> Label) -> Diagram {
        let crossings = self.crossings.iter().map(|c| Crossing::new(c.ends.map(&f))).collect();
        Diagram { crossings, free_loops: self.free_loops }
    }

    /// Component id of every edge label, plus the number of components
    /// carried by crossings (free loops excluded).
    pub fn component_map(&self) -> (BTreeMap<Label, usize>, usize) {
        let mut uf = LabelUnion::default();
        for c in &self.crossings {
            uf.union(c.ends[0], c.ends[2]);
            uf.union(c.ends[1], c.ends[3]);
        }
        let mut ids: BTreeMap<Label, usize> = BTreeMap::new();
        let mut roots: BTreeMap<Label, usize> = BTreeMap::new();
        for l in self.labels() {
            let r = uf.find(l);
            let next = roots.len();
            let id = *roots.entry(r).or_insert(next);
            ids.insert(l, id);
        }
        let n = roots.len();
        (ids, n)
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        self.component_map().1 + self.free_loops
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Diagram with crossing `i` switched.
    pub fn switch_crossing(&self, i: usize) -> Diagram {
        let mut d = self.clone();
        d.crossings[i] = d.crossings[i].switched();
        d
    }

    /// Orient every component by traversal; `true` marks an incoming end.
    /// Each component starts at its lowest-indexed crossing end.
    pub fn incoming(&self) -> Vec<[bool; 4]> {
        let ends = self.dart_of();
        let mut flags = vec![[false; 4]; self.crossings.len()];
        let mut seen = vec![[false; 4]; self.crossings.len()];
        for x in 0..self.crossings.len() {
            for p in 0..4 {
                if seen[x][p] {
                    continue;
                }
                let mut cur = (x, p);
                while !seen[cur.0][cur.1] {
                    let out = (cur.0, (cur.1 + 2) % 4);
                    seen[cur.0][cur.1] = true;
                    seen[out.0][out.1] = true;
                    flags[cur.0][cur.1] = true;
                    cur = faces::opposite(self, &ends, out);
                }
            }
        }
        flags
    }

    /// Crossing signs under the orientation of [`Diagram::incoming`].
    pub fn crossing_signs(&self) -> Vec<i8> {
        self.incoming()
            .iter()
            .map(|f| {
                let p = if f[0] { 0 } else { 2 };
                if f[(p + 3) % 4] {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Sum of crossing signs. Independent of orientation for knots.
    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    /// Signed count of crossings whose strands lie on the same component.
    pub fn self_writhe(&self) -> i64 {
        let (comp, _) = self.component_map();
        self.crossings
            .iter()
            .zip(self.crossing_signs())
            .filter(|(c, _)| comp[&c.ends[0]] == comp[&c.ends[1]])
            .map(|(_, s)| s as i64)
            .sum()
    }

    /// The curl at crossing `i`, if any: `+1` when ends (0,1) or (2,3) are
    /// joined directly, `-1` for (1,2) or (3,0).
    pub fn kink_sign(&self, i: usize) -> Option<i8> {
        let e = self.crossings[i].ends;
        if e[0] == e[1] || e[2] == e[3] {
            Some(1)
        } else if e[1] == e[2] || e[3] == e[0] {
            Some(-1)
        } else {
            None
        }
    }

    /// Undo the curl at crossing `i`.
    pub fn remove_kink(&self, i: usize) -> Option<Diagram> {
        let e = self.crossings[i].ends;
        let keep = if e[0] == e[1] {
            (2, 3)
        } else if e[2] == e[3] {
            (0, 1)
        } else if e[1] == e[2] {
            (3, 0)
        } else if e[3] == e[0] {
            (1, 2)
        } else {
            return None;
        };
        let rest: Vec<[Label; 4]> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.ends)
            .collect();
        let (crossings, lost) = glue(rest, &mut [], &[(e[keep.0], e[keep.1])]);
        Some(Diagram { crossings, free_loops: self.free_loops + lost })
    }

    /// Linking numbers modulo 2: half the signed count of crossings between
    /// components `i` and `j`. The parity does not depend on orientations.
    /// Free loops come last.
    pub fn linking_matrix_mod2(&self) -> Result<Vec<Vec<u8>>> {
        let m = self.components();
        if m < 2 {
            return Err(Error::TooFewComponents { needed: 2, found: m });
        }
        let (comp, _) = self.component_map();
        let mut sums = vec![vec![0i64; m]; m];
        for (c, s) in self.crossings.iter().zip(self.crossing_signs()) {
            let (u, o) = (comp[&c.ends[0]], comp[&c.ends[1]]);
            if u != o {
                sums[u][o] += s as i64;
                sums[o][u] += s as i64;
            }
        }
        Ok(sums
            .into_iter()
            .map(|row| row.into_iter().map(|k| (k / 2).rem_euclid(2) as u8).collect())
            .collect())
    }

    /// Remove the crossing at `i` and join its ends pairwise as given.
    pub(crate) fn resolve(&self, i: usize, pairs: [(usize, usize); 2]) -> Diagram {
        let ends = self.crossings[i].ends;
        let rest: Vec<[Label; 4]> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.ends)
            .collect();
        let joins = [(ends[pairs[0].0], ends[pairs[0].1]), (ends[pairs[1].0], ends[pairs[1].1])];
        let (crossings, lost) = glue(rest, &mut [], &joins);
        Diagram { crossings, free_loops: self.free_loops + lost }
    }

    /// The two smoothings of crossing `i`: ends (0,1)+(2,3) and (0,3)+(1,2).
    pub fn smoothings(&self, i: usize) -> (Diagram, Diagram) {
        (self.resolve(i, [(0, 1), (2, 3)]), self.resolve(i, [(0, 3), (1, 2)]))
    }

    /// Disjoint union.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.max_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing::new(c.ends.map(|l| l + shift))));
        Diagram { crossings, free_loops: self.free_loops + other.free_loops }
    }

    /// Parse the line-oriented text format: `X a b c d`, `O`, `#` comments.
    pub fn parse_pd(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        let mut records = 0;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            records += 1;
            let mut it = line.split_whitespace();
            match it.next() {
                Some("O") => {
                    if it.next().is_some() {
                        return Err(malformed(n, "free loop record takes no arguments"));
                    }
                    free_loops += 1;
                }
                Some("X") => {
                    let nums: Vec<Label> = it
                        .map(|t| t.parse::<Label>().map_err(|_| malformed(n, &format!("bad label `{t}`"))))
                        .collect::<Result<_>>()?;
                    let ends: [Label; 4] =
                        nums.try_into().map_err(|_| malformed(n, "crossing needs exactly 4 labels"))?;
                    crossings.push(Crossing::new(ends));
                }
                Some(tag) => return Err(malformed(n, &format!("unknown record `{tag}`"))),
                None => unreachable!(),
            }
        }
        if records == 0 {
            return Err(Error::EmptyInput);
        }
        Diagram::new(crossings, free_loops)
    }

    /// Text serialization; [`Diagram::parse_pd`] reads it back unchanged.
    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let [a, b, c2, d] = c.ends;
            out.push_str(&format!("X {a} {b} {c2} {d}\n"));
        }
        for _ in 0..self.free_loops {
            out.push_str("O\n");
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: Diagram = serde_json::from_value(v.clone())
            .map_err(|e| Error::Malformed { line: 0, reason: e.to_string() })?;
        Diagram::new(raw.crossings, raw.free_loops)
    }

    /// Faces of the diagram, each as a cycle of darts.
    pub fn faces(&self) -> Vec<Face> {
        faces::faces(self)
    }

    /// The two (crossing, position) ends of every label.
    pub(crate) fn dart_of(&self) -> HashMap<Label, [(usize, usize); 2]> {
        let mut map: HashMap<Label, Vec<(usize, usize)>> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for (p, &l) in c.ends.iter().enumerate() {
                map.entry(l).or_default().push((i, p));
            }
        }
        map.into_iter().map(|(l, v)| (l, [v[0], v[1]])).collect()
    }
}

fn malformed(line: usize, reason: &str) -> Error {
    Error::Malformed { line: line + 1, reason: reason.to_string() }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}
