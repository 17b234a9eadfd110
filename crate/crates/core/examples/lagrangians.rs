//! Boundary colorings of tangles are Lagrangian.
use linkforge::symplectic::{enumerate_lagrangians, lagrangian_count, tangle_lagrangian, SymplecticSpace};
use linkforge::Tangle;

fn main() -> linkforge::Result<()> {
    for (n, p) in [(2, 3), (2, 5), (3, 3)] {
        let all = enumerate_lagrangians(SymplecticSpace::new(p, n)?)?;
        println!("n={n} p={p}: {} Lagrangians (formula {})", all.len(), lagrangian_count(n, p)?);
    }
    let t = Tangle::rational(7, 3)?.compose(&Tangle::integer(2))?;
    for p in [3, 5, 7] {
        let w = tangle_lagrangian(&t, p)?;
        println!("7/3 + 2 at p={p}: basis {:?} lagrangian={}", w.basis, w.is_lagrangian());
    }
    Ok(())
}
