//! Exchange-property and duality invariants, swept over the full corpus.

mod common;

use common::matroid_corpus;
use tutteforge_core::corpus::disjoint_pair_prematroid;
use tutteforge_core::prematroid::subsets_of;
use tutteforge_core::{Budget, ElemSubset};

#[test]
fn symmetric_exchange_holds_on_every_corpus_matroid() {
    for m in matroid_corpus() {
        assert!(m.check_exchange().holds);
        let report = m.check_symmetric_exchange();
        assert!(report.holds, "symmetric exchange failed on {:?}", m.bases());
    }
}

#[test]
fn disjoint_pair_fails_exchange_with_the_documented_witness() {
    let bad = disjoint_pair_prematroid();
    let report = bad.check_exchange();
    assert!(!report.holds);
    let w = report.witness.unwrap();
    assert_eq!(w.basis_a, ElemSubset(0b0011));
    assert_eq!(w.basis_b, ElemSubset(0b1100));
    assert_eq!(w.moved, 0);
    assert!(!bad.check_symmetric_exchange().holds);
}

#[test]
fn no_basis_properly_contains_another() {
    for m in matroid_corpus() {
        assert!(m.is_antichain());
        // almost-bases and over-bases are never bases
        for a in m.almost_bases() {
            assert!(!m.is_basis(a));
        }
        for q in m.over_bases() {
            assert!(!m.is_basis(q));
        }
    }
}

#[test]
fn sandwiched_basis_exists_between_independent_and_spanning_sets() {
    for m in matroid_corpus() {
        let full = m.ground().full();
        for s in subsets_of(full) {
            if !m.bases().iter().any(|&b| b.is_subset_of(s)) {
                continue;
            }
            for j in subsets_of(s) {
                if !m.is_independent(j) {
                    continue;
                }
                let b = m.max_over_extend(j, s).unwrap();
                assert!(m.is_basis(b));
                assert!(j.is_subset_of(b) && b.is_subset_of(s));
            }
        }
    }
}

#[test]
fn removal_set_of_an_over_basis_is_its_unique_circuit() {
    for m in matroid_corpus() {
        for q in m.over_bases() {
            let c = m.circuit_of_overbasis(q, Budget::DEFAULT).unwrap();
            assert_eq!(c, m.removal_set(q).unwrap());
            assert!(c.is_subset_of(q));
        }
        // cross-check against full circuit enumeration
        let circuits = m.circuits(Budget::DEFAULT).unwrap();
        for q in m.over_bases() {
            let inside: Vec<_> = circuits.iter().filter(|c| c.is_subset_of(q)).collect();
            assert_eq!(inside.len(), 1);
            assert_eq!(*inside[0], m.removal_set(q).unwrap());
        }
    }
}

#[test]
fn shared_vertex_triangles_isolate_their_circuit() {
    // two triangles glued at a vertex: a spanning tree plus one triangle
    // edge closes exactly that triangle
    let bowtie =
        tutteforge_core::Graph::from_pairs(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
            .unwrap();
    let m = tutteforge_core::graphic_matroid(&bowtie, Budget::DEFAULT).unwrap();
    // edges e1,e2,e3 form the first triangle; e4,e5 reach the second
    let q = m
        .ground()
        .subset_of_labels(&["e1", "e2", "e3", "e4", "e5"])
        .unwrap();
    let triangle = m.ground().subset_of_labels(&["e1", "e2", "e3"]).unwrap();
    assert_eq!(
        m.circuit_of_overbasis(q, Budget::DEFAULT).unwrap(),
        triangle
    );
}

#[test]
fn extension_and_removal_sets_never_meet_in_one_element() {
    for m in matroid_corpus() {
        let overs = m.over_bases();
        for a in m.almost_bases() {
            let u = m.extension_set(a).unwrap();
            for &q in &overs {
                let c = m.removal_set(q).unwrap();
                assert_ne!(u.intersection(c).len(), 1, "bases {:?}", m.bases());
            }
        }
    }
}

#[test]
fn dual_of_every_corpus_matroid_is_a_matroid() {
    for m in matroid_corpus() {
        assert!(m.dual().check_exchange().holds);
    }
}

#[test]
fn dual_is_an_involution() {
    for m in matroid_corpus() {
        assert_eq!(&m.dual().dual(), m);
    }
    let bad = disjoint_pair_prematroid();
    assert_eq!(bad.dual().dual(), bad);
}

#[test]
fn over_bases_complement_to_dual_almost_bases() {
    // Q is an over-basis exactly when its complement is an almost-basis of
    // the dual, and the removal set of Q is the dual extension set of the
    // complement.
    for m in matroid_corpus().iter().chain([&disjoint_pair_prematroid()]) {
        let dual = m.dual();
        let full = m.ground().full();
        for q in subsets_of(full) {
            let qc = m.ground().complement(q);
            assert_eq!(m.is_over_basis(q), dual.is_almost_basis(qc));
            if let Ok(c) = m.removal_set(q) {
                assert_eq!(c, dual.extension_set(qc).unwrap());
            }
        }
    }
}
