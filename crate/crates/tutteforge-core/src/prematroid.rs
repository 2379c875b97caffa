//! Pre-matroids: non-empty basis families with exchange checks, almost- and
//! over-bases, duality, independence and circuits.

use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::subset::{ElemSubset, GroundSet};

/// A non-empty family of subsets of a ground set, its members called bases.
///
/// Bases are kept sorted ascending by bit pattern and deduplicated, so equal
/// families compare equal and witnesses are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreMatroid {
    ground: GroundSet,
    bases: Vec<ElemSubset>,
}

/// Outcome of an exchange-property check, with the first failing triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeReport {
    pub holds: bool,
    pub witness: Option<ExchangeWitness>,
}

/// A triple `(B1, B2, x)` with `x in B1 \ B2` admitting no exchange partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub basis_a: ElemSubset,
    pub basis_b: ElemSubset,
    pub moved: u8,
}

impl ExchangeReport {
    fn ok() -> Self {
        ExchangeReport {
            holds: true,
            witness: None,
        }
    }

    fn fail(basis_a: ElemSubset, basis_b: ElemSubset, moved: u8) -> Self {
        ExchangeReport {
            holds: false,
            witness: Some(ExchangeWitness {
                basis_a,
                basis_b,
                moved,
            }),
        }
    }
}

/// Build a pre-matroid from label lists, merging duplicates.
pub fn validate_prematroid<S: AsRef<str>>(
    ground: GroundSet,
    family: &[Vec<S>],
) -> Result<PreMatroid> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut bases = Vec::with_capacity(family.len());
    for subset in family {
        bases.push(ground.subset_of_labels(subset)?);
    }
    PreMatroid::from_bases(ground, bases)
}

impl PreMatroid {
    /// Canonicalize a family of bit-vector bases.
    pub fn from_bases(ground: GroundSet, mut bases: Vec<ElemSubset>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let mask = ground.mask();
        if bases.iter().any(|b| b.bits() & !mask != 0) {
            return Err(Error::BadParameters(alloc::format!(
                "basis mentions elements outside the {}-element ground set",
                ground.len()
            )));
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(PreMatroid { ground, bases })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn bases(&self) -> &[ElemSubset] {
        &self.bases
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: ElemSubset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Position of a basis in the canonical order.
    pub fn basis_index(&self, s: ElemSubset) -> Option<usize> {
        self.bases.binary_search(&s).ok()
    }

    /// Exchange property: for all bases `B1, B2` and `x in B1 \ B2` some
    /// `y in B2 \ B1` has `B1 - x + y` a basis. The witness is the first
    /// failure in `(B1 index, B2 index, x index)` order.
    pub fn check_exchange(&self) -> ExchangeReport {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in b1.difference(b2).iter() {
                    let stripped = b1.without(x);
                    let found = b2
                        .difference(b1)
                        .iter()
                        .any(|y| self.is_basis(stripped.with(y)));
                    if !found {
                        return ExchangeReport::fail(b1, b2, x);
                    }
                }
            }
        }
        ExchangeReport::ok()
    }

    /// Symmetric exchange: some `y in B2 \ B1` has both `B1 ^ {x,y}` and
    /// `B2 ^ {x,y}` in the family.
    pub fn check_symmetric_exchange(&self) -> ExchangeReport {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in b1.difference(b2).iter() {
                    let found = b2.difference(b1).iter().any(|y| {
                        let pair = ElemSubset::singleton(x).with(y);
                        self.is_basis(b1.symmetric_difference(pair))
                            && self.is_basis(b2.symmetric_difference(pair))
                    });
                    if !found {
                        return ExchangeReport::fail(b1, b2, x);
                    }
                }
            }
        }
        ExchangeReport::ok()
    }

    pub fn is_matroid(&self) -> bool {
        self.check_exchange().holds
    }

    /// No basis properly contains another. True for every matroid; checked
    /// separately because the definition of a pre-matroid does not demand it.
    pub fn is_antichain(&self) -> bool {
        for (i, &a) in self.bases.iter().enumerate() {
            for &b in &self.bases[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return false;
                }
            }
        }
        true
    }

    /// All sets of the form `B - x`, deduplicated.
    pub fn almost_bases(&self) -> Vec<ElemSubset> {
        let mut out = Vec::new();
        for &b in &self.bases {
            for x in b.iter() {
                out.push(b.without(x));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All sets of the form `B + y`, deduplicated.
    pub fn over_bases(&self) -> Vec<ElemSubset> {
        let mut out = Vec::new();
        for &b in &self.bases {
            for y in self.ground.complement(b).iter() {
                out.push(b.with(y));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The set of elements whose addition to `d` gives a basis. Non-empty
    /// exactly when `d` is an almost-basis; errors otherwise.
    pub fn extension_set(&self, d: ElemSubset) -> Result<ElemSubset> {
        let mut u = ElemSubset::EMPTY;
        for x in self.ground.complement(d).iter() {
            if self.is_basis(d.with(x)) {
                u = u.with(x);
            }
        }
        if u.is_empty() {
            Err(Error::NotAlmostBasis)
        } else {
            Ok(u)
        }
    }

    /// The set of elements whose removal from `q` gives a basis. Non-empty
    /// exactly when `q` is an over-basis; errors otherwise.
    pub fn removal_set(&self, q: ElemSubset) -> Result<ElemSubset> {
        let mut c = ElemSubset::EMPTY;
        for y in q.iter() {
            if self.is_basis(q.without(y)) {
                c = c.with(y);
            }
        }
        if c.is_empty() {
            Err(Error::NotOverBasis)
        } else {
            Ok(c)
        }
    }

    pub fn is_almost_basis(&self, d: ElemSubset) -> bool {
        self.extension_set(d).is_ok()
    }

    pub fn is_over_basis(&self, q: ElemSubset) -> bool {
        self.removal_set(q).is_ok()
    }

    /// The family of complements of all bases.
    pub fn dual(&self) -> PreMatroid {
        let mut bases: Vec<ElemSubset> = self
            .bases
            .iter()
            .map(|&b| self.ground.complement(b))
            .collect();
        bases.sort_unstable();
        PreMatroid {
            ground: self.ground.clone(),
            bases,
        }
    }

    /// A set is independent when some basis contains it.
    pub fn is_independent(&self, y: ElemSubset) -> bool {
        self.bases.iter().any(|&b| y.is_subset_of(b))
    }

    /// Minimal dependent sets: dependent, but every one-element deletion
    /// independent. Enumerates all subsets of the ground set.
    pub fn circuits(&self, budget: Budget) -> Result<Vec<ElemSubset>> {
        let n = self.ground.len();
        budget.check(1u128 << n)?;
        let mut out = Vec::new();
        let top = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut bits = 0u64;
        loop {
            let c = ElemSubset(bits);
            if !self.is_independent(c) && c.iter().all(|x| self.is_independent(c.without(x))) {
                out.push(c);
            }
            if bits == top {
                break;
            }
            bits += 1;
        }
        Ok(out)
    }

    /// The removal set of an over-basis of a matroid, checked to be a circuit
    /// and the unique circuit inside `q`.
    pub fn circuit_of_overbasis(&self, q: ElemSubset, budget: Budget) -> Result<ElemSubset> {
        if !self.is_matroid() {
            return Err(Error::NotAMatroid);
        }
        let c = self.removal_set(q)?;
        // The claimed circuit, verified from the definition.
        if self.is_independent(c) || c.iter().any(|x| !self.is_independent(c.without(x))) {
            return Err(Error::AssertionFailure(
                "removal set of an over-basis is not a circuit",
            ));
        }
        // Uniqueness: no other circuit lives inside q.
        budget.check(1u128 << q.len())?;
        for sub in subsets_of(q) {
            if sub != c
                && !self.is_independent(sub)
                && sub.iter().all(|x| self.is_independent(sub.without(x)))
            {
                return Err(Error::AssertionFailure(
                    "an over-basis contains a second circuit",
                ));
            }
        }
        Ok(c)
    }

    /// A basis `B` with `j <= B <= s`, built by repairing a basis containing
    /// `j` one exchange step at a time until it fits inside `s`.
    pub fn max_over_extend(&self, j: ElemSubset, s: ElemSubset) -> Result<ElemSubset> {
        if !self.is_matroid() {
            return Err(Error::PreconditionViolated("input is not a matroid"));
        }
        if !j.is_subset_of(s) {
            return Err(Error::PreconditionViolated(
                "independent part not inside target",
            ));
        }
        if !self.is_independent(j) {
            return Err(Error::PreconditionViolated("lower set is not independent"));
        }
        let Some(&inner) = self.bases.iter().find(|&&b| b.is_subset_of(s)) else {
            return Err(Error::PreconditionViolated("target contains no basis"));
        };
        let mut current = *self
            .bases
            .iter()
            .find(|&&b| j.is_subset_of(b))
            .expect("an independent set lies in some basis");
        // Each step moves the smallest element outside s to an element of an
        // inner basis, growing current & s strictly, so this terminates.
        while !current.is_subset_of(s) {
            let x = current.difference(s).iter().next().unwrap();
            let stripped = current.without(x);
            let y = inner
                .difference(current)
                .iter()
                .find(|&y| self.is_basis(stripped.with(y)))
                .ok_or(Error::AssertionFailure("exchange step failed"))?;
            current = stripped.with(y);
            debug_assert!(j.is_subset_of(current));
        }
        Ok(current)
    }
}

/// All subsets of a fixed bit set, ascending as integers.
pub fn subsets_of(set: ElemSubset) -> impl Iterator<Item = ElemSubset> {
    // Carry-rippler enumeration of submasks.
    let mask = set.bits();
    let mut current = 0u64;
    let mut done = false;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = ElemSubset(current);
        current = current.wrapping_sub(mask) & mask;
        if current == 0 {
            done = true;
        }
        Some(out)
    })
}
