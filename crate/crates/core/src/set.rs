//! Bitmask subsets of a small ground set.

use std::fmt;

/// Largest ground set representable by [`ElementSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., n-1}` stored as a bitmask.
///
/// Bit `k` is set iff element `k` (presented externally as `k + 1`) is a
/// member. The integer value of the mask is the canonical subset index used
/// by set-function tables, so iterating masks `0..2^n` visits subsets in
/// canonical order.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    /// Collects 0-indexed elements into a set.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements.into_iter().fold(ElementSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Members as a sorted 1-indexed list, the external presentation.
    pub fn to_one_indexed(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Every subset of the `n`-element ground set, in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = ElementSet> + Clone {
        debug_assert!(n < 64);
        (0..1u64 << n).map(ElementSet)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}
