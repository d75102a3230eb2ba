//! Sets of edge colors.

use alloc::vec::Vec;
use core::fmt;

/// Index of a color in the canonical color order of a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId(pub usize);

/// A finite set of [`ColorId`]s, stored as a bitset.
///
/// Trailing zero words are always trimmed so that equal sets compare and
/// hash equal regardless of how they were built.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet {
    words: Vec<u64>,
}

impl ColorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(color: ColorId) -> Self {
        let mut set = Self::new();
        set.insert(color);
        set
    }

    /// All colors `0..n`.
    pub fn full(n: usize) -> Self {
        (0..n).map(ColorId).collect()
    }

    pub fn insert(&mut self, color: ColorId) -> bool {
        let (w, b) = (color.0 / 64, color.0 % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, color: ColorId) -> bool {
        let (w, b) = (color.0 / 64, color.0 % 64);
        let Some(word) = self.words.get_mut(w) else {
            return false;
        };
        let present = *word & (1 << b) != 0;
        *word &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, color: ColorId) -> bool {
        let (w, b) = (color.0 / 64, color.0 % 64);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Colors in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = ColorId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(ColorId(i * 64 + b))
            })
        })
    }

    /// Largest color index plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * 64 + (64 - w.leading_zeros() as usize),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.words.len().max(other.words.len());
        let words = (0..n).map(|i| self.word(i) | other.word(i)).collect();
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.words.len().min(other.words.len());
        let mut set = Self {
            words: (0..n).map(|i| self.word(i) & other.word(i)).collect(),
        };
        set.trim();
        set
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut set = Self {
            words: (0..self.words.len())
                .map(|i| self.word(i) & !other.word(i))
                .collect(),
        };
        set.trim();
        set
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<ColorId> for ColorSet {
    fn from_iter<I: IntoIterator<Item = ColorId>>(iter: I) -> Self {
        let mut set = Self::new();
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn insert_remove_and_trim() {
        let mut s = ColorSet::new();
        assert!(s.insert(ColorId(70)));
        assert!(!s.insert(ColorId(70)));
        s.insert(ColorId(3));
        assert_eq!(s.iter().map(|c| c.0).collect::<Vec<_>>(), vec![3, 70]);
        assert_eq!(s.bound(), 71);
        assert!(s.remove(ColorId(70)));
        assert_eq!(s, ColorSet::singleton(ColorId(3)));
        assert_eq!(s.bound(), 4);
    }

    #[test]
    fn set_algebra() {
        let a: ColorSet = [0, 1, 2].into_iter().map(ColorId).collect();
        let b: ColorSet = [2, 65].into_iter().map(ColorId).collect();
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersection(&b), ColorSet::singleton(ColorId(2)));
        assert_eq!(b.difference(&a), ColorSet::singleton(ColorId(65)));
        assert!(ColorSet::new().is_subset(&a));
        assert!(!b.is_subset(&a));
        assert!(a.difference(&b).is_disjoint(&b));
    }
}
