//! Local moves on diagrams and replayable move certificates.
//!
//! A move either inserts a tangle into a crossing-free disk (an insertion
//! site: two edges on a common face, or free loops) or rewrites the content
//! of a disk that already holds crossings (a region site). Reidemeister
//! moves address crossings directly.
//!
//! For an insertion between edges `e1` and `e2` on face `F`, tangle
//! positions 0 and 3 sit on `e1` and positions 1 and 2 on `e2`, so the
//! 0-tangle gives back the original diagram and `[n]` twists `e1` around
//! `e2`.

mod certificate;
mod region;
mod reidemeister;
mod rotor;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::iso::tangles_isomorphic;
use crate::diagram::{Dart, Diagram, Label, Tangle};
use crate::error::{Error, Result};

pub use certificate::{verify_certificate, CertificateReport, Claim, MoveCertificate, StartDiagram};
pub use rotor::{flip, is_n_rotor, rotor_flip};

use region::Created;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "params")]
pub enum MoveKind {
    /// Add a curl of the given sign.
    #[serde(rename = "R1+")]
    R1Plus {
        #[serde(default = "plus")]
        sign: i8,
    },
    #[serde(rename = "R1-")]
    R1Minus,
    /// Push `e1` over (`sign = 1`) or under `e2`.
    #[serde(rename = "R2+")]
    R2Plus {
        #[serde(default = "plus")]
        sign: i8,
    },
    #[serde(rename = "R2-")]
    R2Minus,
    R3,
    NMove { n: i64 },
    SQMove { s: i64, q: i64 },
    RationalMove { p: i64, q: i64 },
    RotorFlip,
}

fn plus() -> i8 {
    1
}

impl MoveKind {
    pub fn name(&self) -> &'static str {
        match self {
            MoveKind::R1Plus { .. } => "R1+",
            MoveKind::R1Minus => "R1-",
            MoveKind::R2Plus { .. } => "R2+",
            MoveKind::R2Minus => "R2-",
            MoveKind::R3 => "R3",
            MoveKind::NMove { .. } => "NMove",
            MoveKind::SQMove { .. } => "SQMove",
            MoveKind::RationalMove { .. } => "RationalMove",
            MoveKind::RotorFlip => "RotorFlip",
        }
    }

    /// A `±(2,2)`-move.
    pub fn is_two_two(&self) -> bool {
        matches!(*self, MoveKind::SQMove { s, q } if s.abs() == 2 && q.abs() == 2)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::R1Plus { sign } | MoveKind::R2Plus { sign } => write!(f, "{}({sign})", self.name()),
            MoveKind::NMove { n } => write!(f, "NMove({n})"),
            MoveKind::SQMove { s, q } => write!(f, "SQMove({s},{q})"),
            MoveKind::RationalMove { p, q } => write!(f, "RationalMove({p}/{q})"),
            _ => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveSite {
    /// Two edges on a common face. `face` picks among the common faces in
    /// [`Diagram::faces`] order. `first == second` is allowed only for R1.
    Edges {
        first: Label,
        second: Label,
        #[serde(default)]
        face: usize,
    },
    /// An edge and a free loop.
    EdgeLoop { edge: Label },
    /// Two arcs of one free loop.
    LoopSelf,
    /// One arc on each of two free loops.
    LoopPair,
    /// Crossing ids, for R1-, R2- and R3.
    Crossings { ids: Vec<usize> },
    /// A disk holding `crossings`; `start` is the port taken as boundary
    /// position 0. `internal` lists the edges inside the disk and defaults to
    /// every edge between two of the crossings.
    Region {
        crossings: Vec<usize>,
        start: [usize; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        internal: Option<Vec<Label>>,
    },
}

impl From<Created> for MoveSite {
    fn from(c: Created) -> Self {
        MoveSite::Region { crossings: c.crossings, start: [c.start.0, c.start.1], internal: Some(c.internal) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    #[serde(rename = "move")]
    pub kind: MoveKind,
    pub site: MoveSite,
}

impl Move {
    pub fn new(kind: MoveKind, site: MoveSite) -> Self {
        Move { kind, site }
    }
}

/// `[s] + 1/[q]`.
pub fn sq_tangle(s: i64, q: i64) -> Tangle {
    Tangle::integer(s).compose(&reciprocal(q)).expect("2-tangles")
}

/// `1/[q]`: `q` vertical half twists.
pub fn reciprocal(q: i64) -> Tangle {
    Tangle::integer(q).mirror().rotate(1)
}

/// Apply a move.
pub fn apply(d: &Diagram, m: &Move) -> Result<Diagram> {
    apply_traced(d, m).map(|(d, _)| d)
}

/// Apply a move and report where new content went, as a site that the
/// matching inverse move accepts.
pub fn apply_traced(d: &Diagram, m: &Move) -> Result<(Diagram, Option<MoveSite>)> {
    use MoveKind::*;
    use MoveSite::*;
    let wrong = || Error::InvalidSite(format!("{} cannot act on {:?}", m.kind, m.site));
    match (&m.kind, &m.site) {
        (R1Minus, Crossings { ids }) if ids.len() == 1 => reidemeister::remove_curl(d, ids[0]).map(|d| (d, None)),
        (R1Plus { sign }, Edges { first, second, face }) if first == second => {
            reidemeister::add_curl(d, *first, *face, *sign)
        }
        (R1Plus { sign }, LoopSelf) => reidemeister::curl_from_loop(d, *sign),
        (R2Minus, Crossings { ids }) if ids.len() == 2 => reidemeister::remove_bigon(d, ids[0], ids[1]).map(|d| (d, None)),
        (R3, Crossings { ids }) if ids.len() == 3 => reidemeister::triangle(d, [ids[0], ids[1], ids[2]]),
        (_, Edges { .. } | EdgeLoop { .. } | LoopSelf | LoopPair) => {
            let t = inserted(&m.kind).ok_or_else(wrong)?;
            let (out, c) = insert_at(d, &m.site, &t)?;
            Ok((out, c.map(MoveSite::from)))
        }
        (_, Region { crossings, start, internal }) => {
            let internal = match internal {
                Some(v) => v.iter().copied().collect(),
                None => region::inner_labels(d, crossings),
            };
            let r = region::Region::new(d, crossings, &internal, (start[0], start[1]))?;
            let content = r.content(d)?;
            let t = replacement(&m.kind, &content)?.ok_or_else(wrong)?;
            let (out, c) = r.replace(d, &t)?;
            Ok((out, c.map(MoveSite::from)))
        }
        _ => Err(wrong()),
    }
}

/// Tangle put into a crossing-free disk.
fn inserted(kind: &MoveKind) -> Option<Tangle> {
    match *kind {
        MoveKind::R2Plus { sign } => {
            let s = if sign < 0 { -1 } else { 1 };
            Some(Tangle::integer(s).compose(&Tangle::integer(-s)).expect("2-tangles"))
        }
        MoveKind::NMove { n } => Some(Tangle::integer(n)),
        MoveKind::SQMove { s, q } => Some(sq_tangle(s, q)),
        MoveKind::RationalMove { p, q } => Tangle::rational(p, q).ok(),
        _ => None,
    }
}

/// Rotation (0 or 2) taking `pattern` onto `content`, if any.
fn matches(content: &Tangle, pattern: &Tangle) -> Option<isize> {
    [0, 2].into_iter().find(|&r| tangles_isomorphic(content, &pattern.rotate(r)))
}

fn replacement(kind: &MoveKind, content: &Tangle) -> Result<Option<Tangle>> {
    let not = |what: &str| Error::InvalidSite(format!("region content is not {what}"));
    if content.arity() != 2 && *kind != MoveKind::RotorFlip {
        return Err(Error::ArityMismatch(2, content.arity()));
    }
    let pick = |options: Vec<(Tangle, Tangle)>| {
        options.into_iter().find_map(|(pat, rep)| matches(content, &pat).map(|r| rep.rotate(r)))
    };
    Ok(match *kind {
        MoveKind::NMove { n } => {
            let c = content.crossing_count() as i64;
            let found = pick(vec![(Tangle::integer(c), Tangle::integer(c + n)), (Tangle::integer(-c), Tangle::integer(n - c))]);
            Some(found.ok_or_else(|| not("an integer tangle"))?)
        }
        MoveKind::SQMove { s, q } => {
            let found = pick(vec![
                (sq_tangle(s, q), Tangle::zero(2)),
                (Tangle::integer(-s), reciprocal(q)),
                (reciprocal(q), Tangle::integer(-s)),
            ]);
            Some(found.ok_or_else(|| not(&format!("[{s}]+1/[{q}], [{}] or 1/[{q}]", -s)))?)
        }
        MoveKind::RationalMove { p, q } => {
            let found = pick(vec![(Tangle::rational(p, q)?, Tangle::zero(2))]);
            Some(found.ok_or_else(|| not(&format!("the rational tangle {p}/{q}")))?)
        }
        MoveKind::RotorFlip => Some(flip(content)),
        _ => None,
    })
}

fn insert_at(d: &Diagram, site: &MoveSite, t: &Tangle) -> Result<(Diagram, Option<Created>)> {
    let ends = d.dart_of();
    let darts_of = |l: Label| ends.get(&l).copied().ok_or_else(|| Error::InvalidSite(format!("no edge {l}")));
    let other = |dart: Dart| {
        let [u, v] = ends[&d.crossings()[dart.0].ends[dart.1]];
        if u == dart {
            v
        } else {
            u
        }
    };
    match *site {
        MoveSite::Edges { first, second, face } => {
            if first == second {
                return Err(Error::InvalidSite("both arcs are the same edge".into()));
            }
            darts_of(first)?;
            darts_of(second)?;
            let label = |dart: Dart| d.crossings()[dart.0].ends[dart.1];
            let common: Vec<_> = d
                .faces()
                .into_iter()
                .filter(|f| f.darts.iter().any(|&x| label(x) == first) && f.darts.iter().any(|&x| label(x) == second))
                .collect();
            let f = common
                .get(face)
                .ok_or_else(|| Error::InvalidSite(format!("edges {first} and {second} share {} faces", common.len())))?;
            let p1 = *f.darts.iter().find(|&&x| label(x) == first).expect("on face");
            let p2 = *f.darts.iter().find(|&&x| label(x) == second).expect("on face");
            region::insert(d, t, &[Some(other(p1)), Some(p2), Some(other(p2)), Some(p1)], &[], 0)
        }
        MoveSite::EdgeLoop { edge } => {
            let [u, v] = darts_of(edge)?;
            let p1 = u.min(v);
            region::insert(d, t, &[Some(other(p1)), None, None, Some(p1)], &[(1, 2)], 1)
        }
        MoveSite::LoopSelf => region::insert(d, t, &[None; 4], &[(0, 1), (2, 3)], 1),
        MoveSite::LoopPair => region::insert(d, t, &[None; 4], &[(0, 3), (1, 2)], 2),
        _ => Err(Error::InvalidSite("not an insertion site".into())),
    }
}

/// Every crossing-free disk an insertion move can use: each pair of
/// distinct edges on a common face, plus the free-loop sites.
pub fn insertion_sites(d: &Diagram) -> Vec<MoveSite> {
    let faces: Vec<Vec<Label>> = d.faces().iter().map(|f| f.edges(d)).collect();
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for e in &faces {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                let (first, second) = (a.min(b), a.max(b));
                if first == second || !seen.insert((first, second)) {
                    continue;
                }
                let shared = faces.iter().filter(|g| g.contains(&first) && g.contains(&second)).count();
                out.extend((0..shared).map(|face| MoveSite::Edges { first, second, face }));
            }
        }
    }
    if d.free_loops() > 0 {
        out.extend(d.labels().into_iter().map(|edge| MoveSite::EdgeLoop { edge }));
        out.push(MoveSite::LoopSelf);
    }
    if d.free_loops() > 1 {
        out.push(MoveSite::LoopPair);
    }
    out
}

#[cfg(test)]
mod tests;
