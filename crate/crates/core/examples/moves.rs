//! Local moves on diagrams. Insertion moves act on an empty disk (a pair of
//! edges, or free loops) and report the region they created, which can be
//! fed to the next move.
use linkforge::catalog::catalog;
use linkforge::coloring::col;
use linkforge::moves::{apply, apply_traced, Move, MoveKind, MoveSite};
use linkforge::skein::eval_phi5;
use linkforge::Diagram;

fn main() -> linkforge::Result<()> {
    let t2 = Diagram::trivial(2);
    let (hopf, region) = apply_traced(&t2, &Move::new(MoveKind::NMove { n: 2 }, MoveSite::LoopPair))?;
    println!("2-move on T_2: {} crossings, {} components", hopf.crossing_count(), hopf.components());

    // a 3-move inside the same disk: [2] -> [5]
    let region = region.expect("insertion creates a region");
    let five = apply(&hopf, &Move::new(MoveKind::NMove { n: 3 }, region))?;
    println!("col_3: {} -> {}", col(&hopf, 3), col(&five, 3));

    let d = catalog("4_1")?;
    // two edges of the first triangular face; `face` counts among the faces
    // containing both edges
    let faces = d.faces();
    let tri = faces.iter().find(|f| f.darts.len() == 3).expect("4_1 has triangles").edges(&d);
    let (first, second) = (tri[0], tri[1]);
    let face = faces
        .iter()
        .filter(|f| {
            let e = f.edges(&d);
            e.contains(&first) && e.contains(&second)
        })
        .position(|f| f.edges(&d) == tri)
        .expect("the triangle itself");
    let site = MoveSite::Edges { first, second, face };
    let (sq, created) = apply_traced(&d, &Move::new(MoveKind::SQMove { s: 2, q: 2 }, site.clone()))?;
    println!("(2,2)-move on 4_1: F = {} -> {}", eval_phi5(&d)?, eval_phi5(&sq)?);
    let back = apply(&sq, &Move::new(MoveKind::SQMove { s: 2, q: 2 }, created.expect("region")))?;
    println!("and back: F = {}", eval_phi5(&back)?);

    let curl = apply(&d, &Move::new(MoveKind::R1Plus { sign: 1 }, MoveSite::Edges { first: 1, second: 1, face: 0 }))?;
    println!("R1 on 4_1: {} -> {} crossings", d.crossing_count(), curl.crossing_count());
    let rational = apply(&t2, &Move::new(MoveKind::RationalMove { p: 5, q: 2 }, MoveSite::LoopPair))?;
    println!("5/2-move on T_2: {} crossings, col_5 = {}", rational.crossing_count(), col(&rational, 5));
    Ok(())
}
