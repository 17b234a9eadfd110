//! Combinatorial isomorphism of diagrams and tangles.
//!
//! Two codes are isomorphic when a bijection of crossings, each allowed a
//! half turn, carries edges to edges. Tangle boundaries are kept fixed.

use std::collections::HashMap;

use super::{Crossing, Dart, Diagram, Label, Tangle};

const BOUNDARY: usize = usize::MAX;

struct Side<'a> {
    crossings: &'a [Crossing],
    ends: HashMap<Label, Vec<Dart>>,
}

impl<'a> Side<'a> {
    fn new(crossings: &'a [Crossing], boundary: &[Label]) -> Self {
        let mut ends: HashMap<Label, Vec<Dart>> = HashMap::new();
        for (i, c) in crossings.iter().enumerate() {
            for (p, &l) in c.ends.iter().enumerate() {
                ends.entry(l).or_default().push((i, p));
            }
        }
        for (i, &l) in boundary.iter().enumerate() {
            ends.entry(l).or_default().push((BOUNDARY, i));
        }
        Side { crossings, ends }
    }

    fn label(&self, d: Dart) -> Label {
        self.crossings[d.0].ends[d.1]
    }

    fn other(&self, l: Label, d: Dart) -> Dart {
        let v = &self.ends[&l];
        if v[0] == d {
            v[1]
        } else {
            v[0]
        }
    }
}

#[derive(Clone)]
struct State {
    map: Vec<Option<(usize, usize)>>,
    used: Vec<bool>,
}

struct Matcher<'a> {
    a: Side<'a>,
    b: Side<'a>,
}

impl Matcher<'_> {
    /// Map crossing `x` to `y` turned by `off`, then follow edges.
    fn assign(&self, st: &mut State, x: usize, y: usize, off: usize) -> bool {
        let mut queue = vec![(x, y, off)];
        while let Some((x, y, off)) = queue.pop() {
            match st.map[x] {
                Some(m) if m == (y, off) => continue,
                Some(_) => return false,
                None if st.used[y] => return false,
                None => {
                    st.map[x] = Some((y, off));
                    st.used[y] = true;
                }
            }
            for p in 0..4 {
                let q = (p + off) % 4;
                let da = self.a.other(self.a.label((x, p)), (x, p));
                let db = self.b.other(self.b.label((y, q)), (y, q));
                match (da.0 == BOUNDARY, db.0 == BOUNDARY) {
                    (true, true) if da.1 == db.1 => {}
                    (false, false) => {
                        let o = (db.1 + 4 - da.1) % 4;
                        if o % 2 == 1 {
                            return false;
                        }
                        queue.push((da.0, db.0, o));
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    fn search(&self, st: &mut State) -> bool {
        let Some(x) = st.map.iter().position(Option::is_none) else {
            return true;
        };
        for y in 0..st.used.len() {
            if st.used[y] {
                continue;
            }
            for off in [0, 2] {
                let mut trial = st.clone();
                if self.assign(&mut trial, x, y, off) && self.search(&mut trial) {
                    *st = trial;
                    return true;
                }
            }
        }
        false
    }
}

fn fresh(n: usize) -> State {
    State { map: vec![None; n], used: vec![false; n] }
}

pub fn diagrams_isomorphic(a: &Diagram, b: &Diagram) -> bool {
    if a.crossing_count() != b.crossing_count() || a.free_loops() != b.free_loops() {
        return false;
    }
    let m = Matcher { a: Side::new(a.crossings(), &[]), b: Side::new(b.crossings(), &[]) };
    m.search(&mut fresh(a.crossing_count()))
}

/// Isomorphism fixing every boundary position.
pub fn tangles_isomorphic(a: &Tangle, b: &Tangle) -> bool {
    if a.arity() != b.arity() || a.crossing_count() != b.crossing_count() || a.free_loops() != b.free_loops() {
        return false;
    }
    let m = Matcher { a: Side::new(a.crossings(), a.boundary()), b: Side::new(b.crossings(), b.boundary()) };
    let mut st = fresh(a.crossing_count());
    for i in 0..a.boundary().len() {
        let da = m.a.other(a.boundary()[i], (BOUNDARY, i));
        let db = m.b.other(b.boundary()[i], (BOUNDARY, i));
        match (da.0 == BOUNDARY, db.0 == BOUNDARY) {
            (true, true) if da.1 == db.1 => {}
            (false, false) => {
                let o = (db.1 + 4 - da.1) % 4;
                if o % 2 == 1 || !m.assign(&mut st, da.0, db.0, o) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    m.search(&mut st)
}
