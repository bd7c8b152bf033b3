use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices of a fixed carrier `0..n`.
///
/// Ordered canonically: first by cardinality, then by the ascending member
/// list compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    bits: FixedBitSet,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        ElemSet { bits }
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for x in items {
            s.insert(x);
        }
        s
    }

    /// Builds the set whose members are the set bits of `mask` (n ≤ 64).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        Self::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn insert(&mut self, x: usize) -> bool {
        !self.bits.put(x)
    }

    pub fn remove(&mut self, x: usize) {
        self.bits.set(x, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElemSet { bits }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElemSet { bits }
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElemSet { bits }
    }

    pub fn complement(&self) -> ElemSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElemSet { bits }
    }

    /// Image of the set under an index map into a carrier of size `m`.
    pub fn image(&self, map: &[usize], m: usize) -> ElemSet {
        ElemSet::from_iter(m, self.iter().map(|x| map[x]))
    }

    /// Preimage of the set under an index map from a carrier of size `n`.
    pub fn preimage(&self, map: &[usize]) -> ElemSet {
        ElemSet::from_iter(map.len(), (0..map.len()).filter(|&x| self.contains(map[x])))
    }

    /// Renders the members through `labels`, e.g. `{a,c,1}`.
    pub fn display_with(&self, labels: &[String]) -> String {
        let parts: Vec<&str> = self.iter().map(|x| labels[x].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_members() {
        let a = ElemSet::from_iter(5, [2, 4]);
        let b = ElemSet::from_iter(5, [3, 4]);
        let c = ElemSet::from_iter(5, [4]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn set_algebra() {
        let a = ElemSet::from_iter(6, [0, 1, 5]);
        let b = ElemSet::from_iter(6, [1, 2]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![1]);
        assert_eq!(a.complement().to_vec(), vec![2, 3, 4]);
        assert!(ElemSet::from_iter(6, [1]).is_subset(&b));
        assert_eq!(ElemSet::from_mask(4, 0b1010).to_vec(), vec![1, 3]);
        assert!(ElemSet::full(3).is_full());
    }

    #[test]
    fn image_and_preimage() {
        let map = [0, 0, 1, 2];
        let s = ElemSet::from_iter(4, [1, 3]);
        assert_eq!(s.image(&map, 3).to_vec(), vec![0, 2]);
        assert_eq!(ElemSet::from_iter(3, [0]).preimage(&map).to_vec(), vec![0, 1]);
    }
}
