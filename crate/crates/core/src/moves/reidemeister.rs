use std::collections::BTreeSet;

use super::region::Region;
use super::MoveSite;
use crate::diagram::{glue, Diagram, Label, LabelUnion};
use crate::error::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidSite(msg.into())
}

fn check_id(d: &Diagram, x: usize) -> Result<()> {
    if x >= d.crossing_count() {
        return Err(bad(format!("no crossing {x}")));
    }
    Ok(())
}

pub(super) fn remove_curl(d: &Diagram, x: usize) -> Result<Diagram> {
    check_id(d, x)?;
    d.remove_kink(x).ok_or_else(|| bad(format!("crossing {x} is not a curl")))
}

fn curl(x: Label, y: Label, l: Label, sign: i8) -> [Label; 4] {
    // loop between positions 2 and 3 lies left of the strand entering at 0
    if sign < 0 {
        [y, l, l, x]
    } else {
        [x, y, l, l]
    }
}

/// Curl on edge `e`, inside the `face`-th face that has `e` on its boundary.
pub(super) fn add_curl(d: &Diagram, e: Label, face: usize, sign: i8) -> Result<(Diagram, Option<MoveSite>)> {
    let ends = d.dart_of();
    let [u, v] = *ends.get(&e).ok_or_else(|| bad(format!("no edge {e}")))?;
    let label = |(x, p): (usize, usize)| d.crossings()[x].ends[p];
    let darts: Vec<_> = d.faces().into_iter().flat_map(|f| f.darts.into_iter().filter(|&x| label(x) == e)).collect();
    let p = *darts.get(face).ok_or_else(|| bad(format!("edge {e} borders {} faces", darts.len())))?;
    let q = if p == u { v } else { u };
    let m = d.max_label();
    let mut raw: Vec<[Label; 4]> = d.crossings().iter().map(|c| c.ends).collect();
    raw[p.0][p.1] = m + 1;
    raw[q.0][q.1] = m + 2;
    raw.push(curl(m + 1, m + 2, m + 3, sign));
    let id = raw.len() - 1;
    let (crossings, _) = glue(raw, &mut [], &[]);
    Ok((Diagram::new(crossings, d.free_loops())?, Some(MoveSite::Crossings { ids: vec![id] })))
}

pub(super) fn curl_from_loop(d: &Diagram, sign: i8) -> Result<(Diagram, Option<MoveSite>)> {
    if d.free_loops() == 0 {
        return Err(bad("no free loop"));
    }
    let m = d.max_label();
    let mut raw: Vec<[Label; 4]> = d.crossings().iter().map(|c| c.ends).collect();
    let (f, g) = (m + 1, m + 2);
    raw.push(if sign < 0 { [g, f, f, g] } else { [f, f, g, g] });
    let id = raw.len() - 1;
    let (crossings, _) = glue(raw, &mut [], &[]);
    Ok((Diagram::new(crossings, d.free_loops() - 1)?, Some(MoveSite::Crossings { ids: vec![id] })))
}

/// Undo a bigon whose two edges pass both crossings on the same level.
pub(super) fn remove_bigon(d: &Diagram, x: usize, y: usize) -> Result<Diagram> {
    check_id(d, x)?;
    check_id(d, y)?;
    if x == y {
        return Err(bad("R2 needs two crossings"));
    }
    let ends = d.dart_of();
    let c = d.crossings();
    for f in d.faces() {
        if f.darts.len() != 2 {
            continue;
        }
        let Some(&(_, i)) = f.darts.iter().find(|dt| dt.0 == x) else { continue };
        if !f.darts.iter().any(|dt| dt.0 == y) {
            continue;
        }
        let [a, b] = ends[&c[x].ends[i]];
        let (_, j) = if a == (x, i) { b } else { a };
        if i % 2 != j % 2 {
            continue;
        }
        let (cx, cy) = (c[x].ends, c[y].ends);
        let joins = [(cx[(i + 2) % 4], cy[(j + 2) % 4]), (cx[(i + 3) % 4], cy[(j + 1) % 4])];
        let rest: Vec<[Label; 4]> =
            (0..d.crossing_count()).filter(|&k| k != x && k != y).map(|k| c[k].ends).collect();
        let (crossings, lost) = glue(rest, &mut [], &joins);
        return Diagram::new(crossings, d.free_loops() + lost);
    }
    Err(bad(format!("crossings {x} and {y} do not bound a removable bigon")))
}

/// Slide a strand across the crossing of the other two strands of a
/// triangular face. The moved picture is the old one turned by a half turn.
pub(super) fn triangle(d: &Diagram, ids: [usize; 3]) -> Result<(Diagram, Option<MoveSite>)> {
    for &x in &ids {
        check_id(d, x)?;
    }
    let want: BTreeSet<usize> = ids.into_iter().collect();
    if want.len() != 3 {
        return Err(bad("R3 needs three distinct crossings"));
    }
    let c = d.crossings();
    let mut cyclic = false;
    for f in d.faces() {
        if f.darts.len() != 3 || f.darts.iter().map(|dt| dt.0).collect::<BTreeSet<_>>() != want {
            continue;
        }
        let internal: BTreeSet<Label> = f.edges(d).into_iter().collect();
        let start = ids
            .iter()
            .flat_map(|&x| (0..4).map(move |p| (x, p)))
            .find(|&(x, p)| !internal.contains(&c[x].ends[p]))
            .expect("triangle has outer edges");
        let r = Region::new(d, &ids, &internal, start)?;
        let t = r.content(d)?;
        // strands through the disk, and how often each one is on top
        let mut uf = LabelUnion::default();
        for k in t.crossings() {
            uf.union(k.ends[0], k.ends[2]);
            uf.union(k.ends[1], k.ends[3]);
        }
        let mut over: Vec<(Label, usize)> = Vec::new();
        for k in t.crossings() {
            let s = uf.find(k.ends[1]);
            match over.iter_mut().find(|(r, _)| *r == s) {
                Some(e) => e.1 += 1,
                None => over.push((s, 1)),
            }
        }
        if !over.iter().any(|&(_, n)| n == 2) {
            cyclic = true;
            continue;
        }
        let (out, created) = r.replace(d, &t.rotate(3))?;
        let site = created.map(|cr| MoveSite::Crossings { ids: cr.crossings });
        return Ok((out, site));
    }
    if cyclic {
        return Err(bad(format!("triangle {ids:?} is cyclically layered")));
    }
    Err(bad(format!("crossings {ids:?} do not bound a triangle")))
}
