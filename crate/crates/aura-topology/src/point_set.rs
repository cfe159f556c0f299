//! Subsets of a finite universe of indexed points.
//!
//! A [`PointSet`] is a bitset over `{0, …, n-1}` and is the unit every
//! operator in this crate consumes and produces. Sets remember their
//! universe size so that complements are total and accidental mixing of
//! universes is caught early.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the universe `{0, …, n-1}`.
///
/// Universes up to 64 points stay inline; larger universes (grid spaces)
/// spill onto the heap. All binary operations panic if the two operands
/// live in different universes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    words: SmallVec<[u64; 1]>,
}

impl PointSet {
    /// The empty subset of an `n`-point universe.
    pub fn empty(n: usize) -> Self {
        PointSet {
            n,
            words: smallvec::smallvec![0; word_count(n)],
        }
    }

    /// The full universe as a subset of itself.
    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.mask_tail();
        set
    }

    /// The singleton `{point}`.
    pub fn singleton(n: usize, point: usize) -> Self {
        let mut set = Self::empty(n);
        set.insert(point);
        set
    }

    /// Builds a set from point indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut set = Self::empty(n);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `n` bits of a mask. Only valid for `n <= 64`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= WORD_BITS, "from_bits requires a universe of at most 64 points");
        let mut set = Self::empty(n);
        if n > 0 {
            set.words[0] = bits & Self::tail_mask(n);
        }
        set
    }

    fn tail_mask(n: usize) -> u64 {
        let rem = n % WORD_BITS;
        if rem == 0 {
            u64::MAX
        } else {
            (1u64 << rem) - 1
        }
    }

    fn mask_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= Self::tail_mask(self.n);
        }
    }

    /// Size of the ambient universe.
    pub fn universe_size(&self) -> usize {
        self.n
    }

    /// The raw bitmask; only for universes of at most 64 points.
    pub fn bits(&self) -> u64 {
        assert!(self.n <= WORD_BITS, "bits() requires a universe of at most 64 points");
        self.words.first().copied().unwrap_or(0)
    }

    /// Number of points in the set.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.n && self.words[point / WORD_BITS] & (1 << (point % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, point: usize) {
        assert!(point < self.n, "point {point} outside universe of size {}", self.n);
        self.words[point / WORD_BITS] |= 1 << (point % WORD_BITS);
    }

    pub fn remove(&mut self, point: usize) {
        if point < self.n {
            self.words[point / WORD_BITS] &= !(1 << (point % WORD_BITS));
        }
    }

    fn check_universe(&self, other: &PointSet) {
        assert_eq!(
            self.n, other.n,
            "universe size mismatch: {} vs {}",
            self.n, other.n
        );
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        PointSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        PointSet { n: self.n, words }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &PointSet) -> PointSet {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        PointSet { n: self.n, words }
    }

    pub fn complement(&self) -> PointSet {
        let mut set = PointSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        set.mask_tail();
        set
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Iterates member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + tz)
                }
            })
        })
    }

    /// All subsets of an `n`-point universe in ascending numeric order.
    /// Only valid for `n <= 16` (exhaustive-scan territory).
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        assert!(n <= 16, "exhaustive subset enumeration is limited to 16 points");
        (0u64..(1u64 << n)).map(move |bits| PointSet::from_bits(n, bits))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order: sets compare as the integers their bitmasks encode,
/// universes of different sizes compare by size first.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_matches_semantics() {
        let a = PointSet::from_indices(5, [0, 2, 4]);
        let b = PointSet::from_indices(5, [1, 2]);
        assert_eq!(a.union(&b), PointSet::from_indices(5, [0, 1, 2, 4]));
        assert_eq!(a.intersection(&b), PointSet::singleton(5, 2));
        assert_eq!(a.difference(&b), PointSet::from_indices(5, [0, 4]));
        assert_eq!(a.complement(), PointSet::from_indices(5, [1, 3]));
        assert!(PointSet::empty(5).is_subset_of(&a));
        assert!(a.is_subset_of(&PointSet::full(5)));
        assert!(!a.is_subset_of(&b));
    }

    #[test]
    fn complement_is_total_above_word_size() {
        let n = 130;
        let a = PointSet::from_indices(n, [0, 64, 129]);
        let c = a.complement();
        assert_eq!(c.len(), n - 3);
        assert_eq!(a.union(&c), PointSet::full(n));
        assert!(!a.intersects(&c));
    }

    #[test]
    fn iter_yields_ascending_members() {
        let a = PointSet::from_indices(70, [69, 3, 64, 0]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 3, 64, 69]);
    }

    #[test]
    fn numeric_order_is_canonical() {
        let subsets: Vec<PointSet> = PointSet::all_subsets(3).collect();
        assert_eq!(subsets.len(), 8);
        let mut sorted = subsets.clone();
        sorted.sort();
        assert_eq!(subsets, sorted);
        assert_eq!(subsets[0], PointSet::empty(3));
        assert_eq!(subsets[7], PointSet::full(3));
    }

    #[test]
    #[should_panic(expected = "universe size mismatch")]
    fn mixing_universes_panics() {
        let a = PointSet::empty(3);
        let b = PointSet::empty(4);
        let _ = a.union(&b);
    }
}
