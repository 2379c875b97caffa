//! Labeled ground sets and fixed-width bit-vector subsets of them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite labeled ground set of at most 64 elements.
///
/// Elements are addressed by their index `0..n`; labels are only used at the
/// boundaries (parsing and printing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > 64 {
            return Err(Error::BadParameters(
                "ground set size must be between 1 and 64".to_string(),
            ));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::BadParameters(alloc::format!(
                    "duplicate label `{a}`"
                )));
            }
        }
        Ok(Self { labels })
    }

    /// Ground set labeled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // 1 <= n by construction
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: u8) -> &str {
        &self.labels[index as usize]
    }

    pub fn index_of(&self, label: &str) -> Result<u8> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Bit mask with one bit per element.
    pub fn mask(&self) -> u64 {
        if self.labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.labels.len()) - 1
        }
    }

    /// The full subset.
    pub fn full(&self) -> ElemSubset {
        ElemSubset(self.mask())
    }

    /// Complement within this ground set.
    pub fn complement(&self, s: ElemSubset) -> ElemSubset {
        ElemSubset(self.mask() & !s.0)
    }

    /// Parse a list of labels into a subset.
    pub fn subset_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSubset> {
        let mut s = ElemSubset::EMPTY;
        for l in labels {
            s = s.with(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    /// Render a subset as its sorted label list.
    pub fn labels_of(&self, s: ElemSubset) -> Vec<String> {
        s.iter().map(|i| self.labels[i as usize].clone()).collect()
    }
}

/// A subset of a ground set, stored as a 64-bit vector.
///
/// Ordering is by the bit pattern read as an unsigned integer, which is the
/// canonical order used for basis families and witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSubset(pub u64);

impl ElemSubset {
    pub const EMPTY: ElemSubset = ElemSubset(0);

    pub fn singleton(i: u8) -> Self {
        ElemSubset(1u64 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        self.0 & (1u64 << i) != 0
    }

    /// `self + i`; the element must not already be present.
    pub fn with(self, i: u8) -> Self {
        debug_assert!(!self.contains(i));
        ElemSubset(self.0 | (1u64 << i))
    }

    /// `self - i`; the element must be present.
    pub fn without(self, i: u8) -> Self {
        debug_assert!(self.contains(i));
        ElemSubset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElemSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSubset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        ElemSubset(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices of the elements, ascending.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as u8;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl core::ops::BitOr for ElemSubset {
    type Output = ElemSubset;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl core::ops::BitAnd for ElemSubset {
    type Output = ElemSubset;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl core::ops::BitXor for ElemSubset {
    type Output = ElemSubset;
    fn bitxor(self, rhs: Self) -> Self {
        self.symmetric_difference(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_set_rejects_duplicates() {
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(GroundSet::new(Vec::<String>::new()).is_err());
        assert!(GroundSet::numbered(65).is_err());
        assert!(GroundSet::numbered(64).is_ok());
    }

    #[test]
    fn subset_algebra() {
        let g = GroundSet::numbered(3).unwrap();
        let s = g.subset_of_labels(&["1", "3"]).unwrap();
        assert_eq!(s.bits(), 0b101);
        assert_eq!(g.complement(s).bits(), 0b010);
        assert_eq!(s.symmetric_difference(ElemSubset(0b110)).bits(), 0b011);
        assert_eq!(g.labels_of(s), ["1", "3"]);
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 2]);
    }

    #[test]
    fn full_mask_at_width_64() {
        let g = GroundSet::numbered(64).unwrap();
        assert_eq!(g.mask(), u64::MAX);
        assert_eq!(g.complement(g.full()), ElemSubset::EMPTY);
    }
}
