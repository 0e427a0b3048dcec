use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Deserialize, Serialize};

/// Maximum number of poset elements; every subset fits one `u64` mask.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the elements `0..d` of a poset, stored as a bit mask.
///
/// The same type plays every role: ideals, antichains, chains, the
/// images of `max`/`min`, and general subsets fed to `rho`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        ElementSet(mask)
    }

    /// The set `{0, .., d-1}`.
    #[inline]
    pub const fn full(d: usize) -> Self {
        if d >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << d) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(ElementSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    #[inline]
    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1u64 << i))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Strict inclusion.
    #[inline]
    pub const fn is_proper_subset(self, other: ElementSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    #[inline]
    pub const fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Whether every element is below `d`.
    #[inline]
    pub const fn fits(self, d: usize) -> bool {
        self.is_subset(ElementSet::full(d))
    }
}

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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

/// Symmetric difference.
impl BitXor for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitxor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
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
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ElementSet::from_indices([0, 2]);
        let b = ElementSet::from_indices([2, 3]);
        assert_eq!((a | b).to_vec(), vec![0, 2, 3]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0]);
        assert_eq!((a ^ b).to_vec(), vec![0, 3]);
        assert!(ElementSet::EMPTY.is_subset(a));
        assert!(a.is_proper_subset(a | b));
        assert!(!a.is_proper_subset(a));
        assert_eq!(a.to_string(), "{0,2}");
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(3).mask(), 0b111);
        assert!(a.fits(3) && !b.fits(3));
    }
}
