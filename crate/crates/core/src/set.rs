//! Fixed-domain bitsets over the element indices of a single ring.

/// A subset of `{0, 1, ..., domain-1}` stored as a bit vector.
///
/// Every set is created against a fixed domain size (the order of the ring it
/// lives in); set operations require both operands to share that domain.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElemSet {
    domain: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(domain: usize) -> Self {
        ElemSet {
            domain,
            words: vec![0; domain.div_ceil(64)],
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::empty(domain);
        for i in 0..domain {
            s.insert(i);
        }
        s
    }

    pub fn singleton(domain: usize, index: usize) -> Self {
        let mut s = Self::empty(domain);
        s.insert(index);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(domain: usize, indices: I) -> Self {
        let mut s = Self::empty(domain);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    /// Inserts `index`; returns true if it was not already present.
    pub fn insert(&mut self, index: usize) -> bool {
        assert!(index < self.domain, "index {index} outside domain {}", self.domain);
        let (w, b) = (index / 64, index % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, index: usize) -> bool {
        if index >= self.domain {
            return false;
        }
        self.words[index / 64] & (1 << (index % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.domain).filter(move |&i| self.contains(i))
    }

    /// Members as a sorted index list (the canonical serialized form).
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_contains() {
        let mut s = ElemSet::empty(100);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(99));
        assert!(!s.insert(64));
        assert!(s.contains(0) && s.contains(64) && s.contains(99));
        assert!(!s.contains(1));
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 99]);
    }

    #[test]
    fn subset_and_union() {
        let a = ElemSet::from_indices(10, [1, 3]);
        let mut b = ElemSet::from_indices(10, [1]);
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        b.union_with(&a);
        assert_eq!(b, a);
    }

    #[test]
    fn full_set() {
        let f = ElemSet::full(65);
        assert_eq!(f.len(), 65);
        assert!(f.contains(64));
    }
}
