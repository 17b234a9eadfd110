//! Braid words and their closures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{glue, Diagram, Label};
use crate::error::{Error, Result};

/// A word in the Artin generators; `±i` stands for `σ_i^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidBraid(format!("generator {bad} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// `self` repeated `k` times.
    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.repeat(k) }
    }

    /// Cycle type of the underlying permutation: number of cycles.
    pub fn permutation_cycles(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        cycles
    }

    /// Each strand doubled with blackboard framing.
    pub fn cable2(&self) -> BraidWord {
        let mut letters = Vec::new();
        for &l in &self.letters {
            let i = l.abs() * 2 - 1;
            let block = [i + 1, i, i + 2, i + 1];
            if l > 0 {
                letters.extend(block);
            } else {
                letters.extend(block.iter().rev().map(|g| -g));
            }
        }
        BraidWord { strands: self.strands * 2, letters }
    }

    /// Standard closure; strands are drawn downward and `σ_i` is a positive crossing.
    pub fn closure(&self) -> Diagram {
        let s = self.strands;
        let mut cur: Vec<Label> = (1..=s as Label).collect();
        let mut next = s as Label + 1;
        let mut crossings = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (tl, tr) = (cur[i], cur[i + 1]);
            let (bl, br) = (next, next + 1);
            next += 2;
            crossings.push(if l > 0 { [tl, bl, br, tr] } else { [bl, br, tr, tl] });
            cur[i] = bl;
            cur[i + 1] = br;
        }
        let joins: Vec<(Label, Label)> = cur.iter().enumerate().map(|(k, &b)| (b, k as Label + 1)).collect();
        let (crossings, lost) = glue(crossings, &mut [], &joins);
        Diagram::from_parts_unchecked(crossings, lost).normalized()
    }
}

/// Text form `BR k: i1 i2 ...`.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("BR")
            .ok_or_else(|| Error::Malformed { line: 1, reason: "braid record must start with `BR`".into() })?;
        let (k, word) = rest
            .split_once(':')
            .ok_or_else(|| Error::Malformed { line: 1, reason: "missing `:` after strand count".into() })?;
        let strands = k
            .trim()
            .parse()
            .map_err(|_| Error::Malformed { line: 1, reason: format!("bad strand count `{}`", k.trim()) })?;
        let letters = word
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Malformed { line: 1, reason: format!("bad letter `{t}`") }))
            .collect::<Result<Vec<i32>>>()?;
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BR {}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let d = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.components(), 1);
    }

    #[test]
    fn identity_closure_is_trivial_link() {
        let d = BraidWord::new(3, vec![]).unwrap().closure();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.components(), 3);
        assert_eq!(BraidWord::new(5, vec![]).unwrap().closure().components(), 5);
    }

    #[test]
    fn full_twist_squared() {
        let w = BraidWord::new(5, vec![1, 2, 3, 4]).unwrap().pow(10);
        let d = w.closure();
        assert_eq!(d.crossing_count(), 40);
        assert_eq!(d.components(), 5);
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn text_form() {
        let w: BraidWord = "BR 3: 1 -2 1 -2".parse().unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
        assert!("BR x: 1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn partial_identity_keeps_untouched_strand() {
        let d = BraidWord::new(3, vec![1, 1]).unwrap().closure();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.components(), 3);
    }
}
