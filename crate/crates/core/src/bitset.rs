use std::fmt;

const WORD_BITS: usize = 64;

/// Fixed-capacity set of vertex indices, stored as a packed bit vector.
///
/// Bits at or above the capacity are never set, so equal sets compare and
/// hash equally regardless of how they were produced. That makes a
/// `VertexSet` usable directly as a memo key.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for (i, word) in set.words.iter_mut().enumerate() {
            let bits_here = (n - i * WORD_BITS).min(WORD_BITS);
            *word = if bits_here == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << bits_here) - 1
            };
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] & (1 << (v % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Removes every element of `other` from `self`.
    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Iterates elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + bit)
            })
        })
    }

    pub(crate) fn heap_bytes(&self) -> usize {
        self.words.len() * std::mem::size_of::<u64>()
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

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::empty(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(0) && s.contains(64) && s.contains(129));
        assert!(!s.contains(1) && !s.contains(65));
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn full_has_everything() {
        for n in [0, 1, 63, 64, 65, 128, 130] {
            let s = VertexSet::full(n);
            assert_eq!(s.len(), n);
            assert_eq!(s.iter().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn iter_ascending_and_first() {
        let mut s = VertexSet::empty(100);
        for v in [70, 3, 99, 5] {
            s.insert(v);
        }
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 5, 70, 99]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(VertexSet::empty(10).first(), None);
    }

    #[test]
    fn subtract_and_intersection_len() {
        let mut a = VertexSet::empty(70);
        let mut b = VertexSet::empty(70);
        for v in [1, 2, 3, 69] {
            a.insert(v);
        }
        for v in [2, 3, 4] {
            b.insert(v);
        }
        assert_eq!(a.intersection_len(&b), 2);
        a.subtract(&b);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 69]);
    }

    #[test]
    fn equal_sets_hash_equal() {
        use std::collections::HashSet;
        let mut a = VertexSet::empty(65);
        let mut b = VertexSet::empty(65);
        a.insert(64);
        b.insert(64);
        b.insert(10);
        b.remove(10);
        assert_eq!(a, b);
        let mut table = HashSet::new();
        table.insert(a);
        assert!(table.contains(&b));
    }
}
