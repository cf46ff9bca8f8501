/// Fixed-capacity bitset over constraint indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct RowSet {
    words: Vec<u64>,
}

impl RowSet {
    pub fn with_capacity(bits: usize) -> Self {
        RowSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn intersection(&self, other: &RowSet) -> RowSet {
        RowSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn intersection_len(&self, other: &RowSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &RowSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

impl std::fmt::Debug for RowSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let mut a = RowSet::with_capacity(130);
        let mut b = RowSet::with_capacity(130);
        for i in [1, 64, 129] {
            a.insert(i);
        }
        for i in [1, 129] {
            b.insert(i);
        }
        assert_eq!(a.iter().count(), 3);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection_len(&b), 2);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![1, 129]);
        assert!(a.contains(64) && !b.contains(64));
    }
}
