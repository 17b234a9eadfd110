use std::collections::{HashMap, HashSet};
use std::ops::{Add, Mul, Sub};

use super::golden::GoldenValue;
use super::laurent::LaurentPoly2;
use crate::diagram::{Diagram, Label};
use crate::error::{Error, Result};

/// Default cap on skein recursion nodes; `LINKFORGE_NODE_BUDGET` overrides it.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

pub fn node_budget() -> u64 {
    std::env::var("LINKFORGE_NODE_BUDGET").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_NODE_BUDGET)
}

/// Coefficient rings the skein recursion can run in.
pub trait SkeinRing: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn one() -> Self;
    fn a_pow(k: i64) -> Self;
    fn x() -> Self;
    /// Value of a split unknot.
    fn delta() -> Self;

    fn delta_pow(k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * Self::delta())
    }
}

impl SkeinRing for LaurentPoly2 {
    fn one() -> Self {
        LaurentPoly2::one()
    }
    fn a_pow(k: i64) -> Self {
        LaurentPoly2::monomial(1, k, 0)
    }
    fn x() -> Self {
        LaurentPoly2::monomial(1, 0, 1)
    }
    fn delta() -> Self {
        LaurentPoly2::monomial(1, 1, -1) + LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::one()
    }
}

/// At `a = 1` the framing factor disappears.
impl SkeinRing for GoldenValue {
    fn one() -> Self {
        GoldenValue::one()
    }
    fn a_pow(_: i64) -> Self {
        GoldenValue::one()
    }
    fn x() -> Self {
        GoldenValue::x()
    }
    fn delta() -> Self {
        GoldenValue::sqrt5()
    }
}

type Key = (Vec<[Label; 4]>, usize);

struct Evaluator<R> {
    memo: HashMap<Key, R>,
    nodes: u64,
    budget: u64,
}

/// First crossing met from below in a traversal that starts every
/// component at its smallest label. `None` means the diagram descends.
fn first_under(d: &Diagram) -> Option<usize> {
    let darts = d.dart_of();
    let mut labels: Vec<Label> = darts.keys().copied().collect();
    labels.sort_unstable();
    let mut done: HashSet<Label> = HashSet::new();
    let mut visited = vec![false; d.crossing_count()];
    for l in labels {
        if done.contains(&l) {
            continue;
        }
        let [u, v] = darts[&l];
        let start = u.min(v);
        let mut cur = start;
        loop {
            let (x, p) = cur;
            done.insert(d.crossings()[x].ends[p]);
            if !visited[x] {
                visited[x] = true;
                if p % 2 == 0 {
                    return Some(x);
                }
            }
            let out = (x, (p + 2) % 4);
            let m = d.crossings()[x].ends[out.1];
            done.insert(m);
            let [a, b] = darts[&m];
            cur = if a == out { b } else { a };
            if cur == start {
                break;
            }
        }
    }
    None
}

fn key(d: &Diagram) -> Key {
    let n = d.normalized();
    (n.crossings().iter().map(|c| c.ends).collect(), n.free_loops())
}

impl<R: SkeinRing> Evaluator<R> {
    fn eval(&mut self, d: &Diagram) -> Result<R> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut d = d.clone();
        let mut framing = 0i64;
        while let Some(i) = (0..d.crossing_count()).find(|&i| d.kink_sign(i).is_some()) {
            framing += d.kink_sign(i).expect("kink") as i64;
            d = d.remove_kink(i).expect("kink");
        }
        if d.crossing_count() == 0 {
            return Ok(R::a_pow(framing) * R::delta_pow(d.free_loops().saturating_sub(1)));
        }
        let k = key(&d);
        if let Some(v) = self.memo.get(&k) {
            return Ok(R::a_pow(framing) * v.clone());
        }
        let value = match first_under(&d) {
            None => R::a_pow(d.self_writhe()) * R::delta_pow(d.components() - 1),
            Some(i) => {
                let (s0, s1) = d.smoothings(i);
                let f0 = self.eval(&s0)?;
                let f1 = self.eval(&s1)?;
                let fs = self.eval(&d.switch_crossing(i))?;
                R::x() * (f0 + f1) - fs
            }
        };
        self.memo.insert(k, value.clone());
        Ok(R::a_pow(framing) * value)
    }
}

/// Evaluate in any skein ring with an explicit node budget.
pub fn evaluate<R: SkeinRing>(d: &Diagram, budget: u64) -> Result<R> {
    if d.is_empty() {
        return Err(Error::InvalidParameter("the empty diagram has no Kauffman value".into()));
    }
    Evaluator { memo: HashMap::new(), nodes: 0, budget }.eval(d)
}

/// Framed Kauffman polynomial of the blackboard-framed diagram.
pub fn kauffman_framed(d: &Diagram) -> Result<LaurentPoly2> {
    evaluate(d, node_budget())
}

/// `a^{-w} F`, an invariant of unframed links (writhe taken with the
/// traversal orientation, so meaningful for knots).
pub fn kauffman_normalized(d: &Diagram) -> Result<LaurentPoly2> {
    Ok(kauffman_framed(d)?.shift_a(-d.writhe()))
}

/// `F(1, 2cos(2π/5))`, computed directly in the golden ring.
pub fn eval_phi5(d: &Diagram) -> Result<GoldenValue> {
    evaluate(d, node_budget())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn unknot_and_trivial_links() {
        assert_eq!(kauffman_framed(&Diagram::unknot()).unwrap(), LaurentPoly2::one());
        assert_eq!(kauffman_framed(&Diagram::trivial(2)).unwrap(), LaurentPoly2::delta());
        for n in 1..=5 {
            let expect = GoldenValue::sqrt5().pow(n as u32 - 1);
            assert_eq!(eval_phi5(&Diagram::trivial(n)).unwrap(), expect);
        }
    }

    #[test]
    fn curls() {
        let pos = Diagram::from_pd([[1, 1, 2, 2]]).unwrap();
        let neg = Diagram::from_pd([[2, 1, 1, 2]]).unwrap();
        assert_eq!(kauffman_framed(&pos).unwrap(), LaurentPoly2::monomial(1, 1, 0));
        assert_eq!(kauffman_framed(&neg).unwrap(), LaurentPoly2::monomial(1, -1, 0));
        assert_eq!(pos.writhe(), 1);
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn golden_values() {
        assert_eq!(eval_phi5(&catalog("3_1").unwrap()).unwrap(), GoldenValue::new(-1, 0));
        assert_eq!(eval_phi5(&catalog("4_1").unwrap()).unwrap(), GoldenValue::new(-1, -2));
    }

    #[test]
    fn golden_ring_agrees_with_substitution() {
        for name in ["3_1", "4_1", "hopf", "whitehead", "7_4"] {
            let d = catalog(name).unwrap();
            assert_eq!(kauffman_framed(&d).unwrap().eval_phi5(), eval_phi5(&d).unwrap(), "{name}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d = catalog("7_4").unwrap();
        assert_eq!(evaluate::<GoldenValue>(&d, 3), Err(Error::BudgetExceeded(3)));
    }
}
