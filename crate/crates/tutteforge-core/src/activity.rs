//! Order-dependent completion and reduction maps, internal and external
//! activities, the Tutte polynomial of a pre-matroid and of a linking, and
//! the Whitney multi-set.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linking::Linking;
use crate::multiset::{BivarMultiSet, MultiSet};
use crate::order::LinearOrder;
use crate::prematroid::PreMatroid;
use crate::subset::ElemSubset;

/// Completion of an almost-basis by the order-minimal extending element.
pub fn min_extend(m: &PreMatroid, order: &LinearOrder, d: ElemSubset) -> Result<ElemSubset> {
    let u = m.extension_set(d)?;
    Ok(d.with(order.min_in(u).expect("extension set is non-empty")))
}

/// Reduction of an over-basis by the order-minimal removable element.
pub fn min_reduce(m: &PreMatroid, order: &LinearOrder, q: ElemSubset) -> Result<ElemSubset> {
    let c = m.removal_set(q)?;
    Ok(q.without(order.min_in(c).expect("removal set is non-empty")))
}

/// Activity data of one basis.
///
/// `internal` counts the almost-bases completing to the basis; `external`
/// counts the over-bases reducing to it. The marker sets collect the added
/// and removed elements of those fibers; the added markers lie inside the
/// basis and the removed markers outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityRecord {
    pub basis: ElemSubset,
    pub internal: u32,
    pub external: u32,
    pub internal_set: ElemSubset,
    pub external_set: ElemSubset,
}

/// Completion and reduction fibers of every basis of a pre-matroid under a
/// fixed order, computed in one sweep over the almost- and over-bases.
#[derive(Debug, Clone)]
pub struct ActivityTable {
    bases: Vec<ElemSubset>,
    extend_fibers: Vec<Vec<ElemSubset>>,
    reduce_fibers: Vec<Vec<ElemSubset>>,
    internal_marks: Vec<ElemSubset>,
    external_marks: Vec<ElemSubset>,
}

impl ActivityTable {
    pub fn build(m: &PreMatroid, order: &LinearOrder) -> ActivityTable {
        let count = m.basis_count();
        let mut table = ActivityTable {
            bases: m.bases().to_vec(),
            extend_fibers: alloc::vec![Vec::new(); count],
            reduce_fibers: alloc::vec![Vec::new(); count],
            internal_marks: alloc::vec![ElemSubset::EMPTY; count],
            external_marks: alloc::vec![ElemSubset::EMPTY; count],
        };
        for d in m.almost_bases() {
            let u = m.extension_set(d).expect("enumerated almost-basis");
            let added = order.min_in(u).expect("non-empty");
            let idx = m.basis_index(d.with(added)).expect("completion is a basis");
            table.extend_fibers[idx].push(d);
            table.internal_marks[idx] =
                table.internal_marks[idx].union(ElemSubset::singleton(added));
        }
        for q in m.over_bases() {
            let c = m.removal_set(q).expect("enumerated over-basis");
            let removed = order.min_in(c).expect("non-empty");
            let idx = m
                .basis_index(q.without(removed))
                .expect("reduction is a basis");
            table.reduce_fibers[idx].push(q);
            table.external_marks[idx] =
                table.external_marks[idx].union(ElemSubset::singleton(removed));
        }
        table
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn internal(&self, idx: usize) -> u32 {
        self.extend_fibers[idx].len() as u32
    }

    pub fn external(&self, idx: usize) -> u32 {
        self.reduce_fibers[idx].len() as u32
    }

    pub fn extend_fiber(&self, idx: usize) -> &[ElemSubset] {
        &self.extend_fibers[idx]
    }

    pub fn reduce_fiber(&self, idx: usize) -> &[ElemSubset] {
        &self.reduce_fibers[idx]
    }

    pub fn record(&self, idx: usize) -> ActivityRecord {
        let record = ActivityRecord {
            basis: self.bases[idx],
            internal: self.internal(idx),
            external: self.external(idx),
            internal_set: self.internal_marks[idx],
            external_set: self.external_marks[idx],
        };
        // The added markers biject with the completion fiber, and dually.
        debug_assert_eq!(record.internal_set.len(), record.internal);
        debug_assert_eq!(record.external_set.len(), record.external);
        debug_assert!(record.internal_set.is_subset_of(record.basis));
        debug_assert!(record.external_set.intersection(record.basis).is_empty());
        record
    }

    pub fn tutte(&self) -> BivarMultiSet {
        let mut t = BivarMultiSet::new();
        for idx in 0..self.bases.len() {
            t.add((self.internal(idx), self.external(idx)), 1)
                .expect("basis count fits in u64");
        }
        t
    }
}

/// Activity record of one basis.
pub fn activities(m: &PreMatroid, order: &LinearOrder, b: ElemSubset) -> Result<ActivityRecord> {
    let idx = m.basis_index(b).ok_or(Error::NotABasis)?;
    Ok(ActivityTable::build(m, order).record(idx))
}

/// The Tutte polynomial with respect to `order`: one term `x^i y^e` per
/// basis, where `i` and `e` are that basis's fiber sizes.
pub fn tutte(m: &PreMatroid, order: &LinearOrder) -> BivarMultiSet {
    ActivityTable::build(m, order).tutte()
}

/// The Whitney multi-set of a verified linking: the multi-image of the basis
/// family under `B -> (internal(B), internal(B*))`.
pub fn whitney_multiset(l: &Linking, order: &LinearOrder) -> Result<MultiSet<(u32, u32)>> {
    if !l.is_verified() {
        return Err(Error::UnverifiedLinking);
    }
    let source_table = ActivityTable::build(l.source(), order);
    let target_table = ActivityTable::build(l.target(), order);
    let mut w = MultiSet::new();
    for i in 0..l.source().basis_count() {
        w.add(
            (
                source_table.internal(i),
                target_table.internal(l.image_index(i)),
            ),
            1,
        )?;
    }
    Ok(w)
}

/// The Tutte polynomial of a verified linking: the Whitney multi-set read as
/// a polynomial.
pub fn tutte_linking(l: &Linking, order: &LinearOrder) -> Result<BivarMultiSet> {
    whitney_multiset(l, order)
}
