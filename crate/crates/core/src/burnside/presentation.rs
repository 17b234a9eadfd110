use std::fmt;

use serde::Serialize;

use crate::coloring::Relations;
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// A letter `y_gen^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

pub type Word = Vec<Letter>;

/// Cancel adjacent inverse pairs.
pub fn reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    /// Integer relation matrix of the abelianization.
    pub fn abelianized(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for l in r {
                    row[l.gen] += if l.inverse { -1 } else { 1 };
                }
                row
            })
            .collect()
    }

    pub fn word_string(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .iter()
            .map(|l| {
                let g = &self.generators[l.gen];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_string(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// One generator per arc (free loops included), one relator
/// `y_i y_j⁻¹ y_i y_k⁻¹` per crossing with `y_i` the over-arc.
pub fn core_group(d: &Diagram) -> GroupPresentation {
    let rel = Relations::of_diagram(d);
    let generators = (1..=rel.arcs).map(|i| format!("y{i}")).collect();
    let relators = d
        .crossings()
        .iter()
        .map(|c| {
            let i = rel.arc_of[&c.ends[1]];
            let (j, k) = (rel.arc_of[&c.ends[0]], rel.arc_of[&c.ends[2]]);
            reduce(&[Letter::new(i, false), Letter::new(j, true), Letter::new(i, false), Letter::new(k, true)])
        })
        .collect();
    GroupPresentation { generators, relators }
}

/// Set generator `kill` to the identity; the result presents the
/// fundamental group of the double branched cover.
pub fn double_cover_presentation(g: &GroupPresentation, kill: usize) -> Result<GroupPresentation> {
    if g.generators.is_empty() {
        return Err(Error::EmptyPresentation);
    }
    if kill >= g.generators.len() {
        return Err(Error::InvalidParameter(format!("no generator {kill}")));
    }
    let shift = |i: usize| if i > kill { i - 1 } else { i };
    let generators = g.generators.iter().enumerate().filter(|&(i, _)| i != kill).map(|(_, n)| n.clone()).collect();
    let relators = g
        .relators
        .iter()
        .map(|r| {
            let w: Word = r.iter().filter(|l| l.gen != kill).map(|l| Letter::new(shift(l.gen), l.inverse)).collect();
            reduce(&w)
        })
        .filter(|w| !w.is_empty())
        .collect();
    Ok(GroupPresentation { generators, relators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::linalg::smith;
    use num_bigint::BigInt;

    #[test]
    fn abelianization_is_the_coloring_matrix() {
        for name in ["3_1", "4_1", "whitehead", "borromean", "9_49"] {
            let d = catalog(name).unwrap();
            assert_eq!(core_group(&d).abelianized(), Relations::of_diagram(&d).rows, "{name}");
        }
    }

    #[test]
    fn trefoil() {
        let g = core_group(&catalog("3_1").unwrap());
        assert_eq!((g.generators.len(), g.relators.len()), (3, 3));
        assert!(g.relators.iter().all(|r| r.len() == 4));
        let s = smith(&g.abelianized(), 3);
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(3)]);
        let h = double_cover_presentation(&g, 0).unwrap();
        assert_eq!(h.generators.len(), 2);
        let s = smith(&h.abelianized(), 2);
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn degenerate_and_split() {
        let curl = core_group(&Diagram::from_pd([[1, 1, 2, 2]]).unwrap());
        assert!(curl.relators.iter().all(|r| r.is_empty() || r.len() == 2));
        let h = double_cover_presentation(&curl, 0).unwrap();
        assert!(h.relators.iter().all(|r| r.len() <= 2));
        let t4 = double_cover_presentation(&core_group(&Diagram::trivial(4)), 0).unwrap();
        assert_eq!((t4.generators.len(), t4.relators.len()), (3, 0));
        assert_eq!(double_cover_presentation(&core_group(&Diagram::trivial(0)), 0), Err(Error::EmptyPresentation));
    }
}
