//! Per-edge analysis of the order graph: branching and balanced almost-bases
//! and bases, branching images, the basis involution induced by an edge, and
//! the verification sweeps built on it.

use alloc::vec::Vec;

use crate::activity::{whitney_multiset, ActivityTable};
use crate::error::{Error, Result};
use crate::linking::Linking;
use crate::order::{OrderEdge, Side};
use crate::prematroid::PreMatroid;
use crate::subset::ElemSubset;

/// How an almost-basis behaves across an edge: branching when its two
/// completions differ, otherwise non-branching with the common image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlmostClass {
    Branching,
    NonBranching { image: ElemSubset },
}

/// Completions of every almost-basis of a pre-matroid under both orders of
/// an edge, with the branching ones and their images singled out.
#[derive(Debug, Clone)]
pub struct EdgeAnalysis {
    almost: Vec<ElemSubset>,
    image_base: Vec<ElemSubset>,
    image_swapped: Vec<ElemSubset>,
    branching: Vec<bool>,
    branching_images_base: Vec<ElemSubset>,
    branching_images_swapped: Vec<ElemSubset>,
}

impl EdgeAnalysis {
    pub fn build(m: &PreMatroid, edge: &OrderEdge) -> EdgeAnalysis {
        let almost = m.almost_bases();
        let mut image_base = Vec::with_capacity(almost.len());
        let mut image_swapped = Vec::with_capacity(almost.len());
        let mut branching = Vec::with_capacity(almost.len());
        let mut branching_images_base = Vec::new();
        let mut branching_images_swapped = Vec::new();
        for &a in &almost {
            let u = m.extension_set(a).expect("enumerated almost-basis");
            let lo = a.with(edge.base().min_in(u).expect("non-empty"));
            let hi = a.with(edge.swapped().min_in(u).expect("non-empty"));
            let branches = lo != hi;
            if branches {
                // A branching almost-basis avoids the swapped pair, and its
                // two completions add exactly that pair.
                debug_assert_eq!(lo, a.with(edge.lower()));
                debug_assert_eq!(hi, a.with(edge.upper()));
                branching_images_base.push(lo);
                branching_images_swapped.push(hi);
            }
            image_base.push(lo);
            image_swapped.push(hi);
            branching.push(branches);
        }
        branching_images_base.sort_unstable();
        branching_images_base.dedup();
        branching_images_swapped.sort_unstable();
        branching_images_swapped.dedup();
        EdgeAnalysis {
            almost,
            image_base,
            image_swapped,
            branching,
            branching_images_base,
            branching_images_swapped,
        }
    }

    pub fn almost_bases(&self) -> &[ElemSubset] {
        &self.almost
    }

    pub fn almost_index(&self, a: ElemSubset) -> Option<usize> {
        self.almost.binary_search(&a).ok()
    }

    pub fn image(&self, idx: usize, side: Side) -> ElemSubset {
        match side {
            Side::Base => self.image_base[idx],
            Side::Swapped => self.image_swapped[idx],
        }
    }

    pub fn is_branching(&self, idx: usize) -> bool {
        self.branching[idx]
    }

    pub fn branching_almost_bases(&self) -> impl Iterator<Item = ElemSubset> + '_ {
        self.almost
            .iter()
            .zip(&self.branching)
            .filter(|(_, &b)| b)
            .map(|(&a, _)| a)
    }

    pub fn branching_images(&self, side: Side) -> &[ElemSubset] {
        match side {
            Side::Base => &self.branching_images_base,
            Side::Swapped => &self.branching_images_swapped,
        }
    }

    /// Whether `b` is the completion of some branching almost-basis under
    /// either order of the edge.
    pub fn is_branching_image(&self, b: ElemSubset) -> bool {
        self.branching_images_base.binary_search(&b).is_ok()
            || self.branching_images_swapped.binary_search(&b).is_ok()
    }

    /// The completion fiber of `b` under one side's order.
    pub fn fiber(&self, b: ElemSubset, side: Side) -> Vec<ElemSubset> {
        let images = match side {
            Side::Base => &self.image_base,
            Side::Swapped => &self.image_swapped,
        };
        self.almost
            .iter()
            .zip(images)
            .filter(|&(_, &img)| img == b)
            .map(|(&a, _)| a)
            .collect()
    }
}

/// Classify one almost-basis across the edge.
pub fn classify_almost(m: &PreMatroid, edge: &OrderEdge, a: ElemSubset) -> Result<AlmostClass> {
    let u = m.extension_set(a)?;
    let lo = a.with(edge.base().min_in(u).expect("non-empty"));
    let hi = a.with(edge.swapped().min_in(u).expect("non-empty"));
    if lo == hi {
        Ok(AlmostClass::NonBranching { image: lo })
    } else {
        Ok(AlmostClass::Branching)
    }
}

/// Balance of an almost-basis on one side: the swap must carry it to
/// another almost-basis, and completing then swapping must agree with
/// swapping then completing under the other order.
pub fn is_balanced_almost(
    m: &PreMatroid,
    edge: &OrderEdge,
    q: ElemSubset,
    side: Side,
) -> Result<bool> {
    let u = m.extension_set(q)?;
    let swap = edge.swap();
    let moved = swap.apply_to_set(q);
    if !m.is_almost_basis(moved) {
        return Ok(false);
    }
    let this_order = edge.order(side);
    let other_order = edge.order(side.other());
    let image = q.with(this_order.min_in(u).expect("non-empty"));
    let moved_u = m.extension_set(moved).expect("checked almost-basis");
    let moved_image = moved.with(other_order.min_in(moved_u).expect("non-empty"));
    Ok(swap.apply_to_set(image) == moved_image)
}

/// Balance on both sides.
pub fn is_edge_balanced_almost(m: &PreMatroid, edge: &OrderEdge, q: ElemSubset) -> Result<bool> {
    Ok(is_balanced_almost(m, edge, q, Side::Base)?
        && is_balanced_almost(m, edge, q, Side::Swapped)?)
}

/// Balance of a basis on one side: the swapped set is a basis and every
/// almost-basis completing to `b` on this side, or to the swapped basis on
/// the other side, is balanced on both sides.
pub fn is_balanced_basis(
    m: &PreMatroid,
    edge: &OrderEdge,
    b: ElemSubset,
    side: Side,
) -> Result<bool> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis);
    }
    let swap = edge.swap();
    let moved = swap.apply_to_set(b);
    if !m.is_basis(moved) {
        return Ok(false);
    }
    let analysis = EdgeAnalysis::build(m, edge);
    let mut candidates = analysis.fiber(b, side);
    candidates.extend(analysis.fiber(moved, side.other()));
    for q in candidates {
        if !is_edge_balanced_almost(m, edge, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The involution on source bases induced by an edge and a verified linking:
/// a basis is swapped exactly when it or its linked partner is a branching
/// image on its side of the linking.
pub fn edge_involution(l: &Linking, edge: &OrderEdge) -> Result<Vec<usize>> {
    if !l.is_verified() {
        return Err(Error::UnverifiedLinking);
    }
    let source_analysis = EdgeAnalysis::build(l.source(), edge);
    let target_analysis = EdgeAnalysis::build(l.target(), edge);
    let swap = edge.swap();
    let mut map = Vec::with_capacity(l.source().basis_count());
    for (i, &b) in l.source().bases().iter().enumerate() {
        let moves =
            source_analysis.is_branching_image(b) || target_analysis.is_branching_image(l.image(i));
        if moves {
            let idx =
                l.source()
                    .basis_index(swap.apply_to_set(b))
                    .ok_or(Error::AssertionFailure(
                        "swapped image of a branching basis is not a basis",
                    ))?;
            map.push(idx);
        } else {
            map.push(i);
        }
    }
    Ok(map)
}

/// One failed check of [`verify_edge_involution`], with enough context to
/// reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionFailure {
    NotInvolution {
        basis: ElemSubset,
    },
    FiberSize {
        basis: ElemSubset,
        starred: bool,
        forward: u32,
        backward: u32,
    },
    ActivityMismatch {
        basis: ElemSubset,
        starred: bool,
        before: u32,
        after: u32,
    },
    WhitneyChanged,
    FiberMapMismatch {
        basis: ElemSubset,
        starred: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionReport {
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<InvolutionFailure>,
}

/// Verify everything the involution is supposed to transport across the
/// edge: that it is an involution, that fiber sizes and activities agree
/// between the two orders, that the Whitney multi-set is unchanged, and that
/// the per-basis swap maps fibers onto fibers. With `collect_all` the sweep
/// continues past the first failure.
pub fn verify_edge_involution(
    l: &Linking,
    edge: &OrderEdge,
    collect_all: bool,
) -> Result<InvolutionReport> {
    let sigma = edge_involution(l, edge)?;
    let source = l.source();
    let target = l.target();
    let src_analysis = EdgeAnalysis::build(source, edge);
    let tgt_analysis = EdgeAnalysis::build(target, edge);
    let src_base = ActivityTable::build(source, edge.base());
    let src_swapped = ActivityTable::build(source, edge.swapped());
    let tgt_base = ActivityTable::build(target, edge.base());
    let tgt_swapped = ActivityTable::build(target, edge.swapped());
    let swap = edge.swap();

    let mut failures = Vec::new();
    let mut checks = 0usize;
    macro_rules! fail {
        ($f:expr) => {{
            failures.push($f);
            if !collect_all {
                return Ok(InvolutionReport {
                    passed: false,
                    checks,
                    failures,
                });
            }
        }};
    }

    for (i, &b) in source.bases().iter().enumerate() {
        checks += 1;
        if sigma[sigma[i]] != i {
            fail!(InvolutionFailure::NotInvolution { basis: b });
        }

        let si = sigma[i];
        let moved = source.bases()[si];
        let b_star = l.image(i);
        let moved_star = l.image(si);

        // fiber sizes across the edge, plain and starred
        checks += 1;
        let forward = src_analysis.fiber(b, Side::Base).len() as u32;
        let backward = src_analysis.fiber(moved, Side::Swapped).len() as u32;
        if forward != backward {
            fail!(InvolutionFailure::FiberSize {
                basis: b,
                starred: false,
                forward,
                backward,
            });
        }
        checks += 1;
        let forward_star = tgt_analysis.fiber(b_star, Side::Base).len() as u32;
        let backward_star = tgt_analysis.fiber(moved_star, Side::Swapped).len() as u32;
        if forward_star != backward_star {
            fail!(InvolutionFailure::FiberSize {
                basis: b,
                starred: true,
                forward: forward_star,
                backward: backward_star,
            });
        }

        // the same equalities read off the activity tables
        checks += 1;
        let before = src_base.internal(i);
        let after = src_swapped.internal(si);
        if before != after {
            fail!(InvolutionFailure::ActivityMismatch {
                basis: b,
                starred: false,
                before,
                after,
            });
        }
        checks += 1;
        let before_star = tgt_base.internal(l.image_index(i));
        let after_star = tgt_swapped.internal(l.image_index(si));
        if before_star != after_star {
            fail!(InvolutionFailure::ActivityMismatch {
                basis: b,
                starred: true,
                before: before_star,
                after: after_star,
            });
        }

        // the per-basis swap carries fibers onto fibers, elementwise
        let moves = si != i;
        checks += 1;
        let mut carried: Vec<ElemSubset> = src_analysis
            .fiber(b, Side::Base)
            .into_iter()
            .map(|q| if moves { swap.apply_to_set(q) } else { q })
            .collect();
        carried.sort_unstable();
        let mut expected = src_analysis.fiber(moved, Side::Swapped);
        expected.sort_unstable();
        if carried != expected {
            fail!(InvolutionFailure::FiberMapMismatch {
                basis: b,
                starred: false,
            });
        }
        checks += 1;
        let mut carried_star: Vec<ElemSubset> = tgt_analysis
            .fiber(b_star, Side::Base)
            .into_iter()
            .map(|q| if moves { swap.apply_to_set(q) } else { q })
            .collect();
        carried_star.sort_unstable();
        let mut expected_star = tgt_analysis.fiber(moved_star, Side::Swapped);
        expected_star.sort_unstable();
        if carried_star != expected_star {
            fail!(InvolutionFailure::FiberMapMismatch {
                basis: b,
                starred: true,
            });
        }
    }

    checks += 1;
    if whitney_multiset(l, edge.base())? != whitney_multiset(l, edge.swapped())? {
        fail!(InvolutionFailure::WhitneyChanged);
    }

    Ok(InvolutionReport {
        passed: failures.is_empty(),
        checks,
        failures,
    })
}

/// One failed conclusion of [`check_forced_balance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedBalanceFailure {
    pub almost: ElemSubset,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedBalanceReport {
    pub passed: bool,
    /// Number of almost-bases for which the hypothesis held.
    pub hits: usize,
    pub failures: Vec<ForcedBalanceFailure>,
}

/// For matroids on both sides of a verified linking: every non-branching
/// almost-basis whose completion's linked partner is a branching image of
/// the target must swap to another non-branching almost-basis, with both
/// balanced.
pub fn check_forced_balance(l: &Linking, edge: &OrderEdge) -> Result<ForcedBalanceReport> {
    if !l.is_verified() {
        return Err(Error::UnverifiedLinking);
    }
    if !l.source().is_matroid() || !l.target().is_matroid() {
        return Err(Error::NotAMatroid);
    }
    let source = l.source();
    let src_analysis = EdgeAnalysis::build(source, edge);
    let tgt_analysis = EdgeAnalysis::build(l.target(), edge);
    let swap = edge.swap();
    let mut hits = 0usize;
    let mut failures = Vec::new();
    for (idx, &q) in src_analysis.almost_bases().iter().enumerate() {
        if src_analysis.is_branching(idx) {
            continue;
        }
        let image = src_analysis.image(idx, Side::Base);
        let image_star = l.image_of_set(image).expect("completion is a basis");
        if !tgt_analysis.is_branching_image(image_star) {
            continue;
        }
        hits += 1;
        let moved = swap.apply_to_set(q);
        match src_analysis.almost_index(moved) {
            None => failures.push(ForcedBalanceFailure {
                almost: q,
                reason: "swapped set is not an almost-basis",
            }),
            Some(midx) if src_analysis.is_branching(midx) => failures.push(ForcedBalanceFailure {
                almost: q,
                reason: "swapped almost-basis branches",
            }),
            Some(_) => {
                if !is_edge_balanced_almost(source, edge, q)? {
                    failures.push(ForcedBalanceFailure {
                        almost: q,
                        reason: "almost-basis is not balanced",
                    });
                } else if !is_edge_balanced_almost(source, edge, moved)? {
                    failures.push(ForcedBalanceFailure {
                        almost: q,
                        reason: "swapped almost-basis is not balanced",
                    });
                }
            }
        }
    }
    Ok(ForcedBalanceReport {
        passed: failures.is_empty(),
        hits,
        failures,
    })
}
