use super::*;
use crate::catalog::catalog;
use crate::coloring::col;
use crate::diagram::iso::diagrams_isomorphic;
use crate::skein::{eval_phi5, kauffman_framed, LaurentPoly2};
use crate::BraidWord;

fn edges_site(d: &Diagram) -> MoveSite {
    // the first face with two distinct edges
    for f in d.faces() {
        let e = f.edges(d);
        if let Some(&second) = e.iter().find(|&&l| l != e[0]) {
            let first = e[0];
            let face = d
                .faces()
                .iter()
                .filter(|g| {
                    let ge = g.edges(d);
                    ge.contains(&first) && ge.contains(&second)
                })
                .position(|g| *g == f)
                .unwrap();
            return MoveSite::Edges { first, second, face };
        }
    }
    panic!("no face with two edges")
}

fn run(d: &Diagram, kind: MoveKind, site: MoveSite) -> (Diagram, Option<MoveSite>) {
    apply_traced(d, &Move::new(kind, site)).unwrap()
}

#[test]
fn zero_insertion_is_identity() {
    for name in ["3_1", "4_1", "whitehead"] {
        let d = catalog(name).unwrap();
        let (e, _) = run(&d, MoveKind::NMove { n: 0 }, edges_site(&d));
        assert!(diagrams_isomorphic(&e.normalized(), &d.normalized()), "{name}");
    }
}

#[test]
fn n_move_keeps_colorings_and_inverts() {
    for name in ["3_1", "4_1", "7_4"] {
        let d = catalog(name).unwrap();
        for n in [3i64, 5, -3] {
            let (e, site) = run(&d, MoveKind::NMove { n }, edges_site(&d));
            assert_eq!(e.crossing_count(), d.crossing_count() + n.unsigned_abs() as usize);
            assert_eq!(col(&e, n.unsigned_abs()), col(&d, n.unsigned_abs()), "{name} {n}");
            let (back, _) = run(&e, MoveKind::NMove { n: -n }, site.unwrap());
            assert!(diagrams_isomorphic(&back.normalized(), &d.normalized()), "{name} {n}");
        }
    }
}

#[test]
fn two_two_move_negates_golden_value() {
    for name in ["unknot", "3_1", "4_1", "hopf", "7_4"] {
        let d = catalog(name).unwrap();
        let site = if d.crossing_count() == 0 { MoveSite::LoopSelf } else { edges_site(&d) };
        let g = eval_phi5(&d).unwrap();
        for (s, q) in [(2, 2), (-2, -2)] {
            let (e, created) = run(&d, MoveKind::SQMove { s, q }, site.clone());
            assert_eq!(eval_phi5(&e).unwrap(), -g, "{name} ({s},{q})");
            // the region now holds [s] + 1/[q]; undoing restores the value
            let (back, _) = run(&e, MoveKind::SQMove { s, q }, created.unwrap());
            assert_eq!(eval_phi5(&back).unwrap(), g);
        }
    }
}

#[test]
fn sq_move_matches_rational_move() {
    let d = catalog("3_1").unwrap();
    let site = edges_site(&d);
    for (s, q) in [(2, 2), (1, 3), (3, 2), (-2, -2), (2, -3)] {
        let (a, _) = run(&d, MoveKind::SQMove { s, q }, site.clone());
        let (b, _) = run(&d, MoveKind::RationalMove { p: s * q + 1, q }, site.clone());
        assert_eq!(eval_phi5(&a).unwrap(), eval_phi5(&b).unwrap(), "({s},{q})");
        for k in [3, 5, 7] {
            assert_eq!(col(&a, k), col(&b, k), "({s},{q}) mod {k}");
        }
    }
}

#[test]
fn clasp_rotation_is_a_two_two_move() {
    // [-2] -> 1/[2] inside a region
    let d = catalog("3_1").unwrap();
    let (e, site) = run(&d, MoveKind::NMove { n: -2 }, edges_site(&d));
    let (f, _) = run(&e, MoveKind::SQMove { s: 2, q: 2 }, site.unwrap());
    assert_eq!(f.crossing_count(), e.crossing_count());
    assert_eq!(eval_phi5(&f).unwrap(), -eval_phi5(&e).unwrap());
}

#[test]
fn reidemeister_two_round_trip() {
    for name in ["3_1", "4_1", "borromean"] {
        let d = catalog(name).unwrap();
        for sign in [1, -1] {
            let (e, site) = run(&d, MoveKind::R2Plus { sign }, edges_site(&d));
            assert_eq!(kauffman_framed(&e).unwrap(), kauffman_framed(&d).unwrap());
            let Some(MoveSite::Region { crossings, .. }) = site else { panic!() };
            let back = apply(&e, &Move::new(MoveKind::R2Minus, MoveSite::Crossings { ids: crossings })).unwrap();
            assert!(diagrams_isomorphic(&back.normalized(), &d.normalized()), "{name}");
        }
    }
}

#[test]
fn alternating_bigon_is_not_r2() {
    let d = catalog("hopf").unwrap();
    let err = apply(&d, &Move::new(MoveKind::R2Minus, MoveSite::Crossings { ids: vec![0, 1] }));
    assert!(matches!(err, Err(Error::InvalidSite(_))));
}

#[test]
fn curls() {
    let d = catalog("3_1").unwrap();
    let e0 = d.crossings()[0].ends[0];
    for sign in [1i8, -1] {
        for face in [0, 1] {
            let (e, site) = run(&d, MoveKind::R1Plus { sign }, MoveSite::Edges { first: e0, second: e0, face });
            let k = kauffman_framed(&e).unwrap();
            assert_eq!(k, kauffman_framed(&d).unwrap() * LaurentPoly2::monomial(1, sign as i64, 0));
            let back = apply(&e, &Move::new(MoveKind::R1Minus, site.unwrap())).unwrap();
            assert!(diagrams_isomorphic(&back.normalized(), &d.normalized()));
        }
    }
    let (c, _) = run(&Diagram::unknot(), MoveKind::R1Plus { sign: -1 }, MoveSite::LoopSelf);
    assert_eq!(c.writhe(), -1);
}

#[test]
fn reidemeister_three() {
    let d = BraidWord::new(3, vec![1, 2, 1, 2]).unwrap().closure();
    let k = kauffman_framed(&d).unwrap();
    let mut done = 0;
    for a in 0..d.crossing_count() {
        for b in a + 1..d.crossing_count() {
            for c in b + 1..d.crossing_count() {
                let m = Move::new(MoveKind::R3, MoveSite::Crossings { ids: vec![a, b, c] });
                if let Ok((e, site)) = apply_traced(&d, &m) {
                    assert_eq!(kauffman_framed(&e).unwrap(), k);
                    let (back, _) = apply_traced(&e, &Move::new(MoveKind::R3, site.unwrap())).unwrap();
                    assert!(diagrams_isomorphic(&back.normalized(), &d.normalized()));
                    done += 1;
                }
            }
        }
    }
    assert!(done > 0);
}

#[test]
fn loop_sites() {
    let hopf = run(&Diagram::trivial(2), MoveKind::NMove { n: 2 }, MoveSite::LoopPair).0;
    assert_eq!(hopf.components(), 2);
    assert_eq!(col(&hopf, 2), col(&catalog("hopf").unwrap(), 2));
    let curl = run(&Diagram::unknot(), MoveKind::NMove { n: 1 }, MoveSite::LoopSelf).0;
    assert_eq!((curl.crossing_count(), curl.components()), (1, 1));
    let d = catalog("3_1").unwrap().disjoint_union(&Diagram::unknot());
    let e = d.crossings()[0].ends[1];
    let linked = run(&d, MoveKind::NMove { n: 2 }, MoveSite::EdgeLoop { edge: e }).0;
    assert_eq!((linked.crossing_count(), linked.components(), linked.free_loops()), (5, 2, 0));
}

#[test]
fn json_round_trip() {
    let m = Move::new(MoveKind::SQMove { s: 2, q: -2 }, MoveSite::Edges { first: 1, second: 4, face: 0 });
    let s = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<Move>(&s).unwrap(), m);
    let r: Move = serde_json::from_str(r#"{"move":{"variant":"R1-"},"site":{"kind":"crossings","ids":[0]}}"#).unwrap();
    assert_eq!(r.kind, MoveKind::R1Minus);
}
