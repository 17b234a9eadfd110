//! Face tracing over the rotation system stored in the PD code.

use std::collections::HashSet;

use super::{Diagram, Label, LabelUnion};
use crate::error::{Error, Result};

/// A crossing end: (crossing index, position 0..4).
pub type Dart = (usize, usize);

/// A face, as the cyclic list of darts by which its boundary leaves each
/// crossing. The face lies to the left of every traversed edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    /// Edge labels along the boundary, in traversal order.
    pub fn edges(&self, d: &Diagram) -> Vec<Label> {
        self.darts.iter().map(|&(x, p)| d.crossings()[x].ends[p]).collect()
    }
}

/// The other end of the edge leaving through `dart`.
pub(crate) fn opposite(d: &Diagram, ends: &std::collections::HashMap<Label, [Dart; 2]>, dart: Dart) -> Dart {
    let l = d.crossings()[dart.0].ends[dart.1];
    let [u, v] = ends[&l];
    if u == dart {
        v
    } else {
        u
    }
}

pub(crate) fn faces(d: &Diagram) -> Vec<Face> {
    let ends = d.dart_of();
    let mut seen: HashSet<Dart> = HashSet::new();
    let mut out = Vec::new();
    for x in 0..d.crossing_count() {
        for p in 0..4 {
            if seen.contains(&(x, p)) {
                continue;
            }
            let mut darts = Vec::new();
            let mut cur = (x, p);
            while seen.insert(cur) {
                darts.push(cur);
                let (y, j) = opposite(d, &ends, cur);
                cur = (y, (j + 3) % 4);
            }
            out.push(Face { darts });
        }
    }
    out
}

/// Euler characteristic check: each connected piece of the 4-valent graph
/// must be a sphere, `V - E + F = 2`.
pub(crate) fn check_planar(d: &Diagram) -> Result<()> {
    let n = d.crossing_count();
    if n == 0 {
        return Ok(());
    }
    // crossing i is node -(i+1)
    let mut uf = LabelUnion::default();
    let ends = d.dart_of();
    for c in d.crossings() {
        for &l in &c.ends {
            let [u, v] = ends[&l];
            uf.union(-(u.0 as Label) - 1, -(v.0 as Label) - 1);
        }
    }
    let pieces: HashSet<Label> = (0..n).map(|i| uf.find(-(i as Label) - 1)).collect();
    let f = faces(d).len();
    let expected = n + 2 * pieces.len();
    if f != expected {
        return Err(Error::NonPlanar(format!(
            "{f} faces for {n} crossings in {} pieces, expected {expected}",
            pieces.len()
        )));
    }
    Ok(())
}

/// Planarity of a general rotation system: vertex `v` lists its edge labels
/// counterclockwise and every label occurs exactly twice overall.
pub(crate) fn rotation_is_planar(verts: &[Vec<Label>]) -> bool {
    let mut ends: std::collections::HashMap<Label, Vec<Dart>> = std::collections::HashMap::new();
    for (v, ls) in verts.iter().enumerate() {
        for (i, &l) in ls.iter().enumerate() {
            ends.entry(l).or_default().push((v, i));
        }
    }
    let mut uf = LabelUnion::default();
    for ds in ends.values() {
        uf.union(ds[0].0 as Label, ds[1].0 as Label);
    }
    let live: Vec<usize> = (0..verts.len()).filter(|&v| !verts[v].is_empty()).collect();
    let pieces: HashSet<Label> = live.iter().map(|&v| uf.find(v as Label)).collect();
    let edges = ends.len();
    let mut seen: HashSet<Dart> = HashSet::new();
    let mut f = 0;
    for &v in &live {
        for i in 0..verts[v].len() {
            if seen.contains(&(v, i)) {
                continue;
            }
            f += 1;
            let mut cur = (v, i);
            while seen.insert(cur) {
                let ds = &ends[&verts[cur.0][cur.1]];
                let (y, j) = if ds[0] == cur { ds[1] } else { ds[0] };
                let deg = verts[y].len();
                cur = (y, (j + deg - 1) % deg);
            }
        }
    }
    f + live.len() == edges + 2 * pieces.len()
}
