//! Degree sequences and the arithmetic shared by every construction.
//!
//! Positions are 0-based in code. Documentation speaks of `x_1, ..., x_n`
//! where `x_1` is `seq[0]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty list of positive integers: the neighbor counts of the
/// components cut out of one sphere by the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("empty sequence".into()));
        }
        if let Some((i, v)) = entries.iter().enumerate().find(|(_, &v)| v < 1) {
            return Err(Error::InvalidInput(format!(
                "entry {} is {v}; entries must be positive",
                i + 1
            )));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn head(&self) -> i64 {
        self.0[0]
    }

    /// Sum of the entries, or `None` on overflow.
    pub fn sum(&self) -> Option<i64> {
        self.0.iter().try_fold(0i64, |acc, &v| acc.checked_add(v))
    }

    /// `x_1 + ... + x_n = 2n - 2`.
    pub fn is_tree_like(&self) -> bool {
        let target = 2 * self.0.len() as i64 - 2;
        self.sum() == Some(target)
    }

    /// Number of entries greater than 1.
    pub fn r_count(&self) -> usize {
        self.0.iter().filter(|&&v| v > 1).count()
    }

    pub fn unit_count(&self) -> usize {
        self.0.len() - self.r_count()
    }

    /// True when `x_i = 1` exactly for the trailing positions.
    pub fn units_last(&self) -> bool {
        let r = self.r_count();
        self.0[..r].iter().all(|&v| v > 1)
    }

    pub fn is_sorted_desc(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Stable partition: entries > 1 first, then the units.
    ///
    /// Returns the reordered sequence and `perm` with
    /// `reordered[j] == self[perm[j]]`. A head greater than 1 stays first.
    pub fn normalize_units_last(&self) -> (DegreeSequence, Vec<usize>) {
        let (big, units): (Vec<usize>, Vec<usize>) =
            (0..self.0.len()).partition(|&i| self.0[i] > 1);
        let perm: Vec<usize> = big.into_iter().chain(units).collect();
        let entries = perm.iter().map(|&i| self.0[i]).collect();
        (DegreeSequence(entries), perm)
    }

    /// Entries sorted in descending order.
    pub fn sorted_desc(&self) -> DegreeSequence {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(v)
    }

    /// Entries sorted ascending, for multiset comparison.
    pub fn multiset(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Parse `"3,1,1,1"`.
    pub fn parse_csv(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::InvalidInput(format!("bad entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(s: DegreeSequence) -> Self {
        s.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand used throughout the tests.
#[cfg(test)]
pub(crate) fn seq(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tree_like_examples() {
        assert!(seq(&[3, 1, 1, 1]).is_tree_like());
        assert!(seq(&[1, 1]).is_tree_like());
        assert!(!seq(&[2, 2]).is_tree_like());
        assert!(!seq(&[1, 2, 3]).is_tree_like());
        assert!(!seq(&[1]).is_tree_like());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(DegreeSequence::new(vec![]), Err(Error::InvalidInput(_))));
        assert!(DegreeSequence::new(vec![2, 0]).is_err());
        assert!(DegreeSequence::new(vec![-1, 3]).is_err());
        assert!(serde_json::from_str::<DegreeSequence>("[1,0]").is_err());
        let s: DegreeSequence = serde_json::from_str("[3,1,1,1]").unwrap();
        assert_eq!(s, seq(&[3, 1, 1, 1]));
    }

    #[test]
    fn overflowing_sum_is_not_tree_like() {
        let s = seq(&[i64::MAX, i64::MAX, 1]);
        assert_eq!(s.sum(), None);
        assert!(!s.is_tree_like());
    }

    #[test]
    fn normalize_examples() {
        let (s, p) = seq(&[1, 3, 1, 2, 1]).normalize_units_last();
        assert_eq!(s, seq(&[3, 2, 1, 1, 1]));
        assert_eq!(p, vec![1, 3, 0, 2, 4]);

        let (s, p) = seq(&[2, 1, 3]).normalize_units_last();
        assert_eq!(s, seq(&[2, 3, 1]));
        assert_eq!(p, vec![0, 2, 1]);

        let (s, p) = seq(&[1, 1]).normalize_units_last();
        assert_eq!(s, seq(&[1, 1]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn r_count_examples() {
        assert_eq!(seq(&[3, 2, 1, 1, 1]).r_count(), 2);
        assert_eq!(seq(&[1, 1]).r_count(), 0);
        let s = seq(&[3, 1, 1, 1]);
        assert_eq!(s.r_count(), 1);
        assert_eq!(s.unit_count(), 3);
        assert!(s.unit_count() as i64 >= s.head());
    }

    #[test]
    fn parse_csv() {
        assert_eq!(DegreeSequence::parse_csv("3, 1,1,1").unwrap(), seq(&[3, 1, 1, 1]));
        assert!(DegreeSequence::parse_csv("3,x").is_err());
        assert!(DegreeSequence::parse_csv("").is_err());
    }

    /// Every composition of `total` into `n` positive parts.
    fn compositions(n: usize, total: i64) -> Vec<Vec<i64>> {
        if n == 1 {
            return if total >= 1 { vec![vec![total]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 1..=total - (n as i64 - 1) {
            for mut rest in compositions(n - 1, total - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn unit_count_bounds_every_entry_exhaustive() {
        for n in 2..=10 {
            for c in compositions(n, 2 * n as i64 - 2) {
                let s = seq(&c);
                assert!(s.is_tree_like());
                assert_eq!(s.unit_count(), n - s.r_count());
                let max = *c.iter().max().unwrap();
                assert!(s.unit_count() as i64 >= max, "{s}");
            }
        }
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_invertible(v in prop::collection::vec(1i64..6, 1..12)) {
            let s = seq(&v);
            let (norm, perm) = s.normalize_units_last();
            prop_assert!(norm.units_last());
            let (again, id) = norm.normalize_units_last();
            prop_assert_eq!(&again, &norm);
            prop_assert_eq!(id, (0..v.len()).collect::<Vec<_>>());

            let mut seen = vec![false; v.len()];
            for &p in &perm { prop_assert!(!seen[p]); seen[p] = true; }
            let mut back = vec![0; v.len()];
            for (j, &p) in perm.iter().enumerate() { back[p] = norm.entries()[j]; }
            prop_assert_eq!(back, v.clone());
            if v[0] > 1 { prop_assert_eq!(norm.head(), v[0]); }
        }

        #[test]
        fn tree_like_is_permutation_invariant(v in prop::collection::vec(1i64..5, 1..10), k in 0usize..10) {
            let s = seq(&v);
            let mut w = v.clone();
            w.rotate_left(k % v.len());
            w.reverse();
            prop_assert_eq!(s.is_tree_like(), seq(&w).is_tree_like());
        }
    }
}
