use std::fmt;

use crate::error::{Error, Result};

/// A set of ranks `S = {s_1 < s_2 < ... < s_k}`, each a positive integer.
///
/// Rank sets are also used as descent sets, which live in `[n-1]`; selections of
/// ranks of the injective-word poset live in `[n]`. The bound is checked by the
/// constructor and by the operations that consume a rank set, not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSet {
    elements: Vec<usize>,
}

impl RankSet {
    /// Sorts and deduplicates `elements`, rejecting anything outside `1..=bound`.
    pub fn new(mut elements: Vec<usize>, bound: usize) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&e| e == 0 || e > bound) {
            return Err(Error::InvalidRankSet { elements, bound });
        }
        Ok(Self { elements })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        Self {
            elements: (1..=n).collect(),
        }
    }

    /// Rank set whose bit `i - 1` of `mask` marks membership of `i`.
    pub fn from_mask(mask: u64) -> Self {
        let elements = (0..64)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| b as usize + 1)
            .collect();
        Self { elements }
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &e| m | 1 << (e - 1))
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn largest(&self) -> Option<usize> {
        self.elements.last().copied()
    }

    /// Whether every element lies in `1..=bound`.
    pub fn is_within(&self, bound: usize) -> bool {
        self.largest().is_none_or(|m| m <= bound)
    }

    pub fn check_within(&self, bound: usize) -> Result<()> {
        if self.is_within(bound) {
            Ok(())
        } else {
            Err(Error::InvalidRankSet {
                elements: self.elements.clone(),
                bound,
            })
        }
    }

    pub fn with(&self, x: usize) -> Self {
        let mut elements = self.elements.clone();
        if let Err(pos) = elements.binary_search(&x) {
            elements.insert(pos, x);
        }
        Self { elements }
    }

    pub fn without(&self, x: usize) -> Self {
        Self {
            elements: self.elements.iter().copied().filter(|&e| e != x).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &RankSet) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    /// All subsets `T ⊆ S`, in increasing order of their masks.
    pub fn subsets(&self) -> impl Iterator<Item = RankSet> + '_ {
        let k = self.elements.len();
        (0..1u64 << k).map(move |bits| RankSet {
            elements: (0..k)
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| self.elements[i])
                .collect(),
        })
    }

    /// All subsets of `[n]` in increasing mask order, so `∅` comes first and `[n]` last.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = RankSet> {
        (0..1u64 << n).map(RankSet::from_mask)
    }

    /// Comma-joined elements; the empty set renders as the empty string.
    pub fn to_csv_key(&self) -> String {
        self.elements
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the comma-separated command-line form; the empty string is `∅`.
    pub fn parse(s: &str, bound: usize) -> Result<Self> {
        let elements = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad rank `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements, bound)
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_csv_key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_bounds() {
        let s = RankSet::new(vec![3, 1, 3], 3).unwrap();
        assert_eq!(s.elements(), &[1, 3]);
        assert!(RankSet::new(vec![0], 3).is_err());
        assert!(RankSet::new(vec![4], 3).is_err());
        assert_eq!(RankSet::from_mask(s.mask()), s);
    }

    #[test]
    fn subsets_cover_power_set() {
        let s = RankSet::new(vec![2, 5, 7], 7).unwrap();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], RankSet::empty());
        assert_eq!(subs[7], s);
        assert!(subs.iter().all(|t| t.is_subset_of(&s)));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(RankSet::parse("", 3).unwrap(), RankSet::empty());
        assert_eq!(RankSet::parse("1, 2,3", 3).unwrap(), RankSet::full(3));
        assert!(RankSet::parse("1,x", 3).is_err());
        assert!(RankSet::parse("4", 3).is_err());
    }
}
