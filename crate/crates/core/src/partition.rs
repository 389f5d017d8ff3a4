use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer partition, stored as a weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from parts; trailing zeros are dropped, order is checked.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at `row` (0-based), zero past the end.
    pub fn part(&self, row: usize) -> u32 {
        self.0.get(row).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Strictly decreasing parts.
    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let rows = self.0.len();
        let cols = self.part(0) as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols {
            let mut h = 0u32;
            for r in 0..rows {
                if (self.part(r) as usize) > c {
                    h += 1;
                }
            }
            out.push(h);
        }
        Partition(out)
    }

    /// `self` contains `inner` cell-wise.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|r| self.part(r) >= inner.part(r))
    }

    /// All partitions of `n` with at most `max_rows` rows (0 = unbounded).
    pub fn all_of_size(n: u32, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: u32, max_part: u32, max_rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if max_rows != 0 && cur.len() == max_rows {
                return;
            }
            let hi = max_part.min(remaining);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(remaining - p, p, max_rows, cur, out);
                cur.pop();
            }
        }
        rec(n, n, max_rows, &mut cur, &mut out);
        out
    }

    /// All partitions whose diagram fits inside a `rows` x `cols` box, the
    /// empty partition included.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut cur: Vec<u32> = Vec::new();
        fn rec(rows: usize, cols: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == rows {
                return;
            }
            let hi = cur.last().copied().unwrap_or(cols);
            for p in (1..=hi).rev() {
                cur.push(p);
                out.push(Partition(cur.clone()));
                rec(rows, cols, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_normalizes_and_validates() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap().parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn conjugate_involutive() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn counts_of_partitions() {
        // p(0..8) = 1,1,2,3,5,7,11,15,22
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(Partition::all_of_size(n as u32, 0).len(), e, "n={n}");
        }
        // bounded rows: partitions of 6 with <= 2 rows: 6, 51, 42, 33
        assert_eq!(Partition::all_of_size(6, 2).len(), 4);
    }

    #[test]
    fn box_enumeration() {
        // 2x2 box: (), 1, 2, 11, 21, 22
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
    }

    #[test]
    fn containment_and_strictness() {
        let p = Partition::new(vec![3, 2]).unwrap();
        let q = Partition::new(vec![2, 2]).unwrap();
        assert!(p.contains(&q));
        assert!(!q.contains(&p));
        assert!(Partition::new(vec![3, 1]).unwrap().is_strict());
        assert!(!Partition::new(vec![2, 2]).unwrap().is_strict());
    }
}
