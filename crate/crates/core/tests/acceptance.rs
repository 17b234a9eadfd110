//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use common::*;
use linkforge::bounds::{certificate_bound, distance_bound, parity_bound, BoundReport};
use linkforge::burnside::{burnside_report, lie_quotient, GroupPresentation};
use linkforge::catalog::{catalog, names};
use linkforge::coloring::{boundary_image, col, coloring_space, determinant, homology_factors};
use linkforge::moves::{apply, verify_certificate, Move, MoveCertificate, MoveKind};
use linkforge::skein::{eval_phi5, GoldenValue};
use linkforge::symplectic::{enumerate_lagrangians, lagrangian_count, tangle_lagrangian, SymplecticSpace};
use linkforge::{Diagram, Tangle};
use num_bigint::BigUint;
use rand::Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

/// Every bundled entry plus the trivial links T_1..T_6.
fn all_diagrams() -> Vec<(String, Diagram)> {
    let mut v: Vec<(String, Diagram)> =
        names().into_iter().filter(|n| n != "T_n").map(|n| (n.clone(), catalog(&n).unwrap())).collect();
    v.extend((1..=6).map(|n| (format!("T_{n}"), Diagram::trivial(n))));
    v
}

fn root5() -> GoldenValue {
    // x = (√5 - 1)/2
    GoldenValue::new(1, 2)
}

fn criterion_1() -> Check {
    let cases = [("3_1", GoldenValue::new(-1, 0)), ("4_1", -root5()), ("9_49", GoldenValue::new(-5, 0))];
    for (name, want) in cases {
        let t = Instant::now();
        let got = eval_phi5(&catalog(name).unwrap()).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("F({name}) = {got}, want {want}"))?;
        within(t, Duration::from_secs(1))?;
    }
    for n in 1..=5 {
        let got = eval_phi5(&Diagram::trivial(n)).map_err(|e| e.to_string())?;
        let want = root5().pow(n as u32 - 1);
        ensure(got == want, || format!("F(T_{n}) = {got}, want {want}"))?;
    }
    Ok("F(3_1) = -1, F(4_1) = -√5, F(9_49) = -5, F(T_n) = √5^(n-1) for n ≤ 5".into())
}

fn criterion_2() -> Check {
    let t = Instant::now();
    let mut count = 0;
    for (name, d) in all_diagrams() {
        if d.crossing_count() > 12 {
            continue;
        }
        let f = eval_phi5(&d).map_err(|e| format!("{name}: {e}"))?;
        let rhs = f * f * 5;
        let c = col(&d, 5);
        ensure(rhs.v == 0 && BigUint::from(rhs.u as u64) == c, || format!("{name}: col_5 = {c}, 5F² = {rhs}"))?;
        count += 1;
    }
    within(t, Duration::from_secs(30))?;
    Ok(format!("col_5 = 5·F² on {count} diagrams in {:.2?}", t.elapsed()))
}

fn criterion_3() -> Check {
    let p = parity_bound(&catalog("9_49").unwrap()).map_err(|e| e.to_string())?;
    ensure(p == 3, || format!("parity_bound(9_49) = {p}"))?;
    let dist = distance_bound(&catalog("3_1").unwrap(), &catalog("4_1").unwrap()).map_err(|e| e.to_string())?;
    ensure(dist == 2, || format!("distance_bound(3_1, 4_1) = {dist}"))?;
    ensure(certificate_bound(2, 4) == 2, || "certificate_bound(2, 4) != 2".into())?;
    let mut ks = Vec::new();
    for name in ["7_4", "8_8", "8_16"] {
        let path = format!("{}/data/certificates/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let cert = MoveCertificate::from_json_str(&text).map_err(|e| e.to_string())?;
        let rep = verify_certificate(&cert).map_err(|e| format!("{name}: {e}"))?;
        ensure(rep.two_two_moves % 2 == 0, || format!("{name}: odd move count {}", rep.two_two_moves))?;
        let d = catalog(name).unwrap();
        let b = BoundReport::for_diagram(name, &d).and_then(|b| b.with_certificate(&d, &cert)).map_err(|e| e.to_string())?;
        ensure(b.best == 2, || format!("{name}: best bound {}", b.best))?;
        ks.push(format!("{name}: k={}", rep.two_two_moves));
    }
    Ok(format!("parity(9_49) = 3, distance(3_1,4_1) = 2, certificates {}", ks.join(", ")))
}

/// A 2-algebraic 3-tangle from elementary crossings and rotations.
fn random_three_tangle(r: &mut impl Rng) -> Tangle {
    let mut t = Tangle::zero(3);
    for _ in 0..r.gen_range(1..7) {
        let e = Tangle::elementary(3, r.gen_range(0..2), r.gen_bool(0.5)).unwrap();
        t = t.compose(&e).unwrap();
        if r.gen_bool(0.3) {
            t = t.rotate(r.gen_range(1..6));
        }
    }
    t
}

fn criterion_4() -> Check {
    let t = Instant::now();
    let mut r = rng(4);
    for i in 0..200 {
        let tangle = if i % 2 == 0 { random_algebraic_tangle(&mut r) } else { random_three_tangle(&mut r) };
        for p in [3, 5, 7] {
            let w = tangle_lagrangian(&tangle, p).map_err(|e| e.to_string())?;
            ensure(w.is_lagrangian(), || format!("trial {i}, p={p}: not Lagrangian"))?;
            let img = boundary_image(&tangle, p).map_err(|e| e.to_string())?;
            ensure(img.dim() == tangle.arity(), || format!("trial {i}, p={p}: ψ image dim {}", img.dim()))?;
        }
    }
    for ((n, p), want) in [((2, 3), 4), ((2, 5), 6), ((3, 3), 40)] {
        let all = enumerate_lagrangians(SymplecticSpace::new(p, n).unwrap()).map_err(|e| e.to_string())?;
        let formula = lagrangian_count(n, p).map_err(|e| e.to_string())?;
        ensure(all.len() == want && formula == want as u128, || format!("(n,p)=({n},{p}): {} vs {formula}", all.len()))?;
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!("200 tangles × p∈{{3,5,7}} Lagrangian, counts 4/6/40, {:.2?}", t.elapsed()))
}

fn criterion_5() -> Check {
    let t = Instant::now();
    let mut got = Vec::new();
    for (name, want) in [("T_5", 14), ("T_6", 25), ("chen_braid", 10), ("parallel_borromean", 21)] {
        let rep = burnside_report(&catalog(name).unwrap(), 3).map_err(|e| e.to_string())?;
        ensure(rep.order_exponent == Some(want), || format!("{name}: {:?}, want {want}", rep.order_exponent))?;
        got.push(format!("{name} 3^{want}"));
    }
    within(t, Duration::from_secs(600))?;
    Ok(format!("{} in {:.2?}", got.join(", "), t.elapsed()))
}

fn criterion_6() -> Check {
    let free = GroupPresentation { generators: vec!["a".into(), "b".into()], relators: vec![] };
    let q = lie_quotient(&free, 5, 3).map_err(|e| e.to_string())?;
    ensure(q.dims == [2, 1, 2], || format!("free rank 2 at p=5: {:?}", q.dims))?;
    for (name, p) in [("9_40", 5), ("9_49", 5), ("closure_(σ1σ2)^6", 5), ("closure_(σ1σ2)^6", 7)] {
        let rep = burnside_report(&catalog(name).unwrap(), p).map_err(|e| e.to_string())?;
        ensure(rep.obstruction, || format!("{name} p={p}: no obstruction, dims {:?}", rep.dims))?;
    }
    for n in 1..=6 {
        for p in [3, 5, 7] {
            let rep = burnside_report(&Diagram::trivial(n), p).map_err(|e| e.to_string())?;
            ensure(!rep.obstruction, || format!("T_{n} p={p}: obstruction"))?;
        }
    }
    Ok("free (2,1,2); obstructions for 9_40, 9_49, (σ1σ2)^6 at 5 and 7; none for T_1..T_6".into())
}

fn criterion_7() -> Check {
    const TRIALS: usize = 100;
    let mut r = rng(7);
    let factors = |d: &Diagram, k: u64| coloring_space(d, k).unwrap().cyclic_factors;
    for k in [3i64, 4, 5, 7] {
        for i in 0..TRIALS {
            let d = random_diagram(&mut r);
            let n = if r.gen_bool(0.5) { k } else { -k };
            let e = random_insertion(&mut r, &d, MoveKind::NMove { n }).unwrap();
            ensure(factors(&e, k as u64) == factors(&d, k as u64), || format!("{k}-move trial {i}"))?;
        }
    }
    for i in 0..TRIALS {
        let d = random_diagram(&mut r);
        let n = if r.gen_bool(0.5) { 4 } else { -4 };
        let e = random_insertion(&mut r, &d, MoveKind::NMove { n }).unwrap();
        if d.components() >= 2 {
            ensure(e.linking_matrix_mod2().unwrap() == d.linking_matrix_mod2().unwrap(), || format!("linking trial {i}"))?;
        }
    }
    for i in 0..TRIALS {
        let d = random_diagram(&mut r);
        let s = if r.gen_bool(0.5) { 2 } else { -2 };
        let e = random_insertion(&mut r, &d, MoveKind::SQMove { s, q: s }).unwrap();
        ensure(eval_phi5(&e).unwrap() == -eval_phi5(&d).unwrap(), || format!("(2,2) trial {i}"))?;
    }
    for i in 0..TRIALS {
        let d = random_diagram(&mut r);
        let p = [3i64, 5, 7][r.gen_range(0..3)];
        let q = r.gen_range(1..p) * if r.gen_bool(0.5) { 1 } else { -1 };
        let e = random_insertion(&mut r, &d, MoveKind::RationalMove { p, q }).unwrap();
        let (a, b) = (burnside_report(&d, p as u64), burnside_report(&e, p as u64));
        ensure(a.map(|x| x.dims) == b.map(|x| x.dims), || format!("{p}/{q}-move trial {i}"))?;
    }
    for i in 0..TRIALS {
        let d = random_diagram(&mut r);
        let s = r.gen_range(-3..4i64);
        let q = [-3i64, -2, -1, 1, 2, 3][r.gen_range(0..6)];
        let site = random_site(&mut r, &d).unwrap();
        let a = apply(&d, &Move::new(MoveKind::SQMove { s, q }, site.clone())).unwrap();
        let b = apply(&d, &Move::new(MoveKind::RationalMove { p: s * q + 1, q }, site)).unwrap();
        ensure(eval_phi5(&a).unwrap() == eval_phi5(&b).unwrap(), || format!("SQ trial {i}: golden value"))?;
        for m in 2..=13 {
            ensure(factors(&a, m) == factors(&b, m), || format!("SQ trial {i}: col_{m}"))?;
        }
        ensure(a.components() == b.components(), || format!("SQ trial {i}: components"))?;
    }
    Ok(format!("{TRIALS} trials each: k-moves, 4-move linking, (2,2) sign, rational Burnside, SQ = rational"))
}

fn criterion_8() -> Check {
    let mut n = 0;
    for (name, d) in all_diagrams() {
        let det = determinant(&d);
        let h = homology_factors(&d);
        for p in [3u64, 5, 7] {
            let dim = coloring_space(&d, p).unwrap().dim();
            let l1 = burnside_report(&d, p).map(|r| r.dims[0]).or_else(|e| match e {
                linkforge::Error::EmptyPresentation => Ok(0),
                e => Err(e.to_string()),
            })?;
            ensure(dim == l1 + 1, || format!("{name} p={p}: dim Col = {dim}, L1 = {l1}"))?;
            let divides = &det % p == BigUint::from(0u32);
            ensure(divides == (dim >= 2), || format!("{name} p={p}: det {det} vs dim {dim}"))?;
            let from_h = h.iter().filter(|f| *f % p == BigUint::from(0u32) || **f == BigUint::from(0u32)).count();
            ensure(dim == from_h + 1, || format!("{name} p={p}: homology {h:?} vs dim {dim}"))?;
            n += 1;
        }
    }
    Ok(format!("dim Col_p - 1 = dim L1 and det vs col_p on {n} (diagram, p) pairs"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("golden values", criterion_1),
        ("col_5 = 5F^2", criterion_2),
        ("unknotting bounds", criterion_3),
        ("Lagrangian suite", criterion_4),
        ("exponent-3 orders", criterion_5),
        ("p=5 obstructions", criterion_6),
        ("move invariance", criterion_7),
        ("cross-module consistency", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{:.2?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{:.2?}]", i + 1, t.elapsed());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
