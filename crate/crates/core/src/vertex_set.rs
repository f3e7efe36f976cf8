use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

/// Largest graph order the knowledge-set game supports.
pub const MAX_GAME_ORDER: usize = 128;

/// Set of vertex ids below [`MAX_GAME_ORDER`], stored as a bitmask.
///
/// Ordering compares the raw masks; iteration is in ascending id order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_GAME_ORDER);
        if order == MAX_GAME_ORDER {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << order) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_GAME_ORDER && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_edges() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert!(VertexSet::full(128).contains(127));
        assert!(!VertexSet::full(5).contains(5));
        assert_eq!(VertexSet::EMPTY.first(), None);
    }

    proptest! {
        #[test]
        fn iter_roundtrip(mut vs in proptest::collection::vec(0usize..128, 0..40)) {
            let s: VertexSet = vs.iter().copied().collect();
            vs.sort_unstable();
            vs.dedup();
            prop_assert_eq!(s.to_vec(), vs.clone());
            prop_assert_eq!(s.len(), vs.len());
            prop_assert_eq!(s.first(), vs.first().copied());
        }
    }
}
