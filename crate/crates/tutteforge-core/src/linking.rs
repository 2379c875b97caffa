//! Linkings: bijections between basis families that commute with
//! transpositions, their verification and their classification.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::order::Transposition;
use crate::prematroid::PreMatroid;
use crate::subset::ElemSubset;

/// A bijection from the bases of `source` onto the bases of `target`,
/// both living on the same ground set. `map[i]` is the target index of
/// source basis `i`.
///
/// The `verified` flag is set only by [`Linking::verify`]; operations that
/// rely on the linking conditions require it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linking {
    source: PreMatroid,
    target: PreMatroid,
    map: Vec<usize>,
    verified: bool,
}

/// Which of the two linking conditions failed: `Forward` moves a source
/// basis and demands the coherent move of its image, `Backward` is the
/// symmetric condition starting from the target side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkCondition {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingViolation {
    pub condition: LinkCondition,
    pub basis: ElemSubset,
    pub swap: Transposition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingReport {
    pub is_linking: bool,
    pub violation: Option<LinkingViolation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkingClass {
    Identity,
    Complement,
}

impl Linking {
    /// An unverified linking candidate.
    pub fn new(source: PreMatroid, target: PreMatroid, map: Vec<usize>) -> Result<Self> {
        if source.ground() != target.ground() {
            return Err(Error::GroundMismatch);
        }
        if source.basis_count() != target.basis_count() || map.len() != source.basis_count() {
            return Err(Error::NotABijection);
        }
        let mut seen = alloc::vec![false; map.len()];
        for &t in &map {
            if t >= map.len() || seen[t] {
                return Err(Error::NotABijection);
            }
            seen[t] = true;
        }
        Ok(Linking {
            source,
            target,
            map,
            verified: false,
        })
    }

    /// The identity map on the bases of `m`, verified.
    pub fn identity(m: &PreMatroid) -> Linking {
        let map = (0..m.basis_count()).collect();
        let mut l = Linking {
            source: m.clone(),
            target: m.clone(),
            map,
            verified: false,
        };
        let report = l.verify();
        debug_assert!(report.is_linking);
        l
    }

    /// The complementation map onto the dual family, verified.
    pub fn complement(m: &PreMatroid) -> Linking {
        let target = m.dual();
        let map = m
            .bases()
            .iter()
            .map(|&b| {
                target
                    .basis_index(m.ground().complement(b))
                    .expect("complement of a basis is a dual basis")
            })
            .collect();
        let mut l = Linking {
            source: m.clone(),
            target,
            map,
            verified: false,
        };
        let report = l.verify();
        debug_assert!(report.is_linking);
        l
    }

    pub fn source(&self) -> &PreMatroid {
        &self.source
    }

    pub fn target(&self) -> &PreMatroid {
        &self.target
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Target basis of source basis `i`.
    pub fn image(&self, i: usize) -> ElemSubset {
        self.target.bases()[self.map[i]]
    }

    pub fn image_index(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Target basis of a source basis given as a set.
    pub fn image_of_set(&self, b: ElemSubset) -> Option<ElemSubset> {
        self.source.basis_index(b).map(|i| self.image(i))
    }

    pub fn inverse(&self) -> Linking {
        let mut map = alloc::vec![0usize; self.map.len()];
        for (i, &t) in self.map.iter().enumerate() {
            map[t] = i;
        }
        Linking {
            source: self.target.clone(),
            target: self.source.clone(),
            map,
            verified: self.verified,
        }
    }

    /// Check both linking conditions for every basis and every transposition
    /// of the ground set; reports the first violation.
    pub fn check(&self) -> LinkingReport {
        let n = self.source.ground().len() as u8;
        for (i, &b) in self.source.bases().iter().enumerate() {
            let b_star = self.image(i);
            for x in 0..n {
                for y in x + 1..n {
                    let swap = Transposition { a: x, b: y };
                    let moved = swap.apply_to_set(b);
                    let moved_star = swap.apply_to_set(b_star);
                    // Forward: a moved source basis forces the coherent move
                    // of the image.
                    if let Some(j) = self.source.basis_index(moved) {
                        if self.image(j) != moved_star {
                            return LinkingReport {
                                is_linking: false,
                                violation: Some(LinkingViolation {
                                    condition: LinkCondition::Forward,
                                    basis: b,
                                    swap,
                                }),
                            };
                        }
                    }
                    // Backward: a moved target basis forces the moved source
                    // basis to exist and map onto it.
                    if self.target.is_basis(moved_star) {
                        let ok = self
                            .source
                            .basis_index(moved)
                            .map(|j| self.image(j) == moved_star)
                            .unwrap_or(false);
                        if !ok {
                            return LinkingReport {
                                is_linking: false,
                                violation: Some(LinkingViolation {
                                    condition: LinkCondition::Backward,
                                    basis: b,
                                    swap,
                                }),
                            };
                        }
                    }
                }
            }
        }
        LinkingReport {
            is_linking: true,
            violation: None,
        }
    }

    /// Run [`check`](Self::check) and record the outcome in the flag.
    pub fn verify(&mut self) -> LinkingReport {
        let report = self.check();
        self.verified = report.is_linking;
        report
    }

    /// Decide whether a verified linking is the identity or complementation.
    ///
    /// For matroid sources these are the only possibilities, so
    /// `ClassificationFailure` on a matroid signals an implementation bug.
    /// Pre-matroids genuinely admit other linkings.
    pub fn classify(&self) -> Result<LinkingClass> {
        if !self.verified {
            return Err(Error::UnverifiedLinking);
        }
        let is_identity =
            self.target == self.source && self.map.iter().enumerate().all(|(i, &t)| i == t);
        if is_identity {
            return Ok(LinkingClass::Identity);
        }
        let dual = self.source.dual();
        let is_complement = self.target == dual
            && self
                .source
                .bases()
                .iter()
                .enumerate()
                .all(|(i, &b)| self.image(i) == self.source.ground().complement(b));
        if is_complement {
            return Ok(LinkingClass::Complement);
        }
        Err(Error::ClassificationFailure)
    }

    /// Conditional transfer of extensions: when the image of `s + x` equals
    /// `a + y`, the element `x` must extend `a` in the target. Returns true
    /// when the implication holds (vacuously when the premise fails).
    pub fn check_extension_transfer(
        &self,
        s: ElemSubset,
        x: u8,
        y: u8,
        a: ElemSubset,
    ) -> Result<bool> {
        if x == y {
            return Err(Error::PreconditionViolated("elements must be distinct"));
        }
        let u = self
            .source
            .extension_set(s)
            .map_err(|_| Error::PreconditionViolated("s is not an almost-basis of the source"))?;
        if !u.contains(x) || !u.contains(y) {
            return Err(Error::PreconditionViolated(
                "both elements must extend the almost-basis",
            ));
        }
        if !self.target.is_almost_basis(a) {
            return Err(Error::PreconditionViolated(
                "a is not an almost-basis of the target",
            ));
        }
        let image = self
            .image_of_set(s.with(x))
            .expect("s + x is a basis because x extends s");
        let premise = !a.contains(y) && image == a.with(y);
        if !premise {
            return Ok(true);
        }
        Ok(self
            .target
            .extension_set(a)
            .map(|ext| ext.contains(x))
            .unwrap_or(false))
    }
}

/// A chain of bases from `from` to `to` in which consecutive members differ
/// by one transposition, built from greedy symmetric-exchange steps.
pub fn basis_path(m: &PreMatroid, from: ElemSubset, to: ElemSubset) -> Result<Vec<ElemSubset>> {
    if !m.is_basis(from) || !m.is_basis(to) {
        return Err(Error::NotABasis);
    }
    let mut chain = alloc::vec![from];
    let mut current = from;
    while current != to {
        let mut stepped = None;
        'outer: for x in current.difference(to).iter() {
            for y in to.difference(current).iter() {
                let pair = ElemSubset::singleton(x).with(y);
                let next = current.symmetric_difference(pair);
                if m.is_basis(next) && m.is_basis(to.symmetric_difference(pair)) {
                    stepped = Some(next);
                    break 'outer;
                }
            }
        }
        current = stepped.ok_or(Error::NotAMatroid)?;
        chain.push(current);
    }
    Ok(chain)
}
