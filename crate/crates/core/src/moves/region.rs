//! Cutting a disk out of a diagram and gluing a tangle back in.

use std::collections::{BTreeSet, HashMap};

use crate::diagram::{glue, Crossing, Dart, Diagram, Label, Tangle};
use crate::error::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidSite(msg.into())
}

/// A disk in a diagram with its ports listed counterclockwise.
#[derive(Clone, Debug)]
pub(crate) struct Region {
    pub crossings: Vec<usize>,
    pub ports: Vec<Dart>,
}

fn other_end(ends: &HashMap<Label, [Dart; 2]>, d: &Diagram, dart: Dart) -> Dart {
    let [u, v] = ends[&d.crossings()[dart.0].ends[dart.1]];
    if u == dart {
        v
    } else {
        u
    }
}

/// Labels joining two crossings of `set`.
pub(crate) fn inner_labels(d: &Diagram, set: &[usize]) -> BTreeSet<Label> {
    let ends = d.dart_of();
    ends.iter().filter(|(_, [u, v])| set.contains(&u.0) && set.contains(&v.0)).map(|(&l, _)| l).collect()
}

impl Region {
    /// Walk the boundary of the disk spanned by `crossings` and the edges in
    /// `internal`, starting from the port `start`.
    pub fn new(d: &Diagram, crossings: &[usize], internal: &BTreeSet<Label>, start: Dart) -> Result<Region> {
        if crossings.is_empty() {
            return Err(bad("region has no crossings"));
        }
        let mut set: Vec<usize> = crossings.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.len() != crossings.len() || set.iter().any(|&x| x >= d.crossing_count()) {
            return Err(bad(format!("bad crossing ids {crossings:?}")));
        }
        let ends = d.dart_of();
        let label = |(x, p): Dart| d.crossings()[x].ends[p];
        for l in internal {
            match ends.get(l) {
                Some([u, v]) if set.contains(&u.0) && set.contains(&v.0) => {}
                _ => return Err(bad(format!("edge {l} is not inside the region"))),
            }
        }
        if !set.contains(&start.0) || start.1 > 3 || internal.contains(&label(start)) {
            return Err(bad(format!("{start:?} is not a port of the region")));
        }
        let expected = set.len() * 4 - 2 * internal.len();
        let mut ports = vec![start];
        let mut cur = start;
        loop {
            let mut next = (cur.0, (cur.1 + 1) % 4);
            let mut steps = 0;
            while internal.contains(&label(next)) {
                let (y, q) = other_end(&ends, d, next);
                next = (y, (q + 1) % 4);
                steps += 1;
                if steps > 4 * set.len() {
                    return Err(bad("region boundary does not close"));
                }
            }
            if next == start {
                break;
            }
            if ports.len() > expected {
                return Err(bad("region is not a disk"));
            }
            ports.push(next);
            cur = next;
        }
        if ports.len() != expected || ports.len() % 2 == 1 {
            return Err(bad("region is not a disk"));
        }
        Ok(Region { crossings: set, ports })
    }

    /// The region's content as a tangle; boundary position `i` is port `i`.
    pub fn content(&self, d: &Diagram) -> Result<Tangle> {
        let fresh = d.max_label() + 1;
        let mut cs: Vec<Crossing> = self.crossings.iter().map(|&x| d.crossings()[x]).collect();
        let boundary: Vec<Label> = (0..self.ports.len()).map(|i| fresh + i as Label).collect();
        for (i, &(x, p)) in self.ports.iter().enumerate() {
            let k = self.crossings.iter().position(|&c| c == x).expect("port in region");
            cs[k].ends[p] = boundary[i];
        }
        Tangle::new(cs, boundary, 0).map_err(|e| bad(format!("region content: {e}")))
    }

    /// Replace the content by `t`, keeping the ports.
    pub fn replace(&self, d: &Diagram, t: &Tangle) -> Result<(Diagram, Option<Created>)> {
        if t.boundary().len() != self.ports.len() {
            return Err(Error::ArityMismatch(self.ports.len() / 2, t.arity()));
        }
        let keep: Vec<[Label; 4]> = (0..d.crossing_count())
            .filter(|x| !self.crossings.contains(x))
            .map(|x| d.crossings()[x].ends)
            .collect();
        let base = keep.len();
        let tp = fresh_copy(d, t);
        let joins: Vec<(Label, Label)> = self
            .ports
            .iter()
            .zip(tp.boundary())
            .map(|(&(x, p), &b)| (b, d.crossings()[x].ends[p]))
            .collect();
        let raw = keep.into_iter().chain(tp.crossings().iter().map(|c| c.ends)).collect();
        let (crossings, lost) = glue(raw, &mut [], &joins);
        let out = Diagram::new(crossings, d.free_loops() + t.free_loops() + lost)?;
        Ok((out, Created::of(&tp, base)))
    }
}

/// Where freshly glued content ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Created {
    pub crossings: Vec<usize>,
    pub start: Dart,
    pub internal: Vec<Label>,
}

impl Created {
    fn of(tp: &Tangle, base: usize) -> Option<Created> {
        let b0 = tp.boundary()[0];
        let start = tp
            .crossings()
            .iter()
            .enumerate()
            .find_map(|(k, c)| c.ends.iter().position(|&l| l == b0).map(|p| (base + k, p)))?;
        let bset: BTreeSet<Label> = tp.boundary().iter().copied().collect();
        let internal: BTreeSet<Label> =
            tp.crossings().iter().flat_map(|c| c.ends).filter(|l| !bset.contains(l)).collect();
        Some(Created {
            crossings: (base..base + tp.crossing_count()).collect(),
            start,
            internal: internal.into_iter().collect(),
        })
    }
}

/// `t` relabeled above every label of `d`.
fn fresh_copy(d: &Diagram, t: &Tangle) -> Tangle {
    let lo = t.crossings().iter().flat_map(|c| c.ends).chain(t.boundary().iter().copied()).min().unwrap_or(0);
    let hi = d.crossings().iter().flat_map(|c| c.ends).max().unwrap_or(0);
    t.shifted(hi - lo + 1)
}

/// Glue `t` into `d`: boundary position `i` takes over the dart `attach[i]`,
/// or is joined to another position through `loop_joins`. `loops_used` free
/// loops of `d` are consumed by the joins.
pub(crate) fn insert(
    d: &Diagram,
    t: &Tangle,
    attach: &[Option<Dart>],
    loop_joins: &[(usize, usize)],
    loops_used: usize,
) -> Result<(Diagram, Option<Created>)> {
    if t.boundary().len() != attach.len() {
        return Err(Error::ArityMismatch(attach.len() / 2, t.arity()));
    }
    if loops_used > d.free_loops() {
        return Err(bad(format!("needs {loops_used} free loops, diagram has {}", d.free_loops())));
    }
    let tp = fresh_copy(d, t);
    let mut raw: Vec<[Label; 4]> = d.crossings().iter().map(|c| c.ends).collect();
    for (i, a) in attach.iter().enumerate() {
        if let Some((x, p)) = *a {
            raw[x][p] = tp.boundary()[i];
        }
    }
    let base = raw.len();
    raw.extend(tp.crossings().iter().map(|c| c.ends));
    let joins: Vec<(Label, Label)> = loop_joins.iter().map(|&(i, j)| (tp.boundary()[i], tp.boundary()[j])).collect();
    let (crossings, lost) = glue(raw, &mut [], &joins);
    let out = Diagram::new(crossings, d.free_loops() - loops_used + t.free_loops() + lost)?;
    Ok((out, Created::of(&tp, base)))
}
