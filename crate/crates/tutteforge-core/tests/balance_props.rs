//! Branching, balance, and the edge involution, swept over every corpus
//! matroid, every edge of the order graph, and both canonical linkings.

mod common;

use common::{canonical_linkings, matroid_corpus, undirected_edges};
use tutteforge_core::{
    check_forced_balance, edge_involution, is_balanced_basis, is_edge_balanced_almost,
    verify_edge_involution, whitney_multiset, EdgeAnalysis, OrderEdge, PreMatroid, Side,
};

fn for_each_edge(mut visit: impl FnMut(&PreMatroid, &OrderEdge)) {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            visit(m, edge);
        }
    }
}

#[test]
fn branching_almost_bases_are_balanced() {
    for_each_edge(|m, edge| {
        let analysis = EdgeAnalysis::build(m, edge);
        for a in analysis.branching_almost_bases() {
            assert!(is_edge_balanced_almost(m, edge, a).unwrap());
        }
    });
}

#[test]
fn non_branching_pairs_balance_together() {
    for_each_edge(|m, edge| {
        let analysis = EdgeAnalysis::build(m, edge);
        let swap = edge.swap();
        for (idx, &q) in analysis.almost_bases().iter().enumerate() {
            if analysis.is_branching(idx) {
                continue;
            }
            let moved = swap.apply_to_set(q);
            match analysis.almost_index(moved) {
                Some(midx) if !analysis.is_branching(midx) => {
                    assert_eq!(
                        is_edge_balanced_almost(m, edge, q).unwrap(),
                        is_edge_balanced_almost(m, edge, moved).unwrap()
                    );
                }
                _ => {}
            }
        }
    });
}

#[test]
fn moved_completions_avoid_the_swapped_pair() {
    // when a non-branching completion q + d moves to a different basis
    // under the swap, d is neither element of the swapped pair
    for_each_edge(|m, edge| {
        let analysis = EdgeAnalysis::build(m, edge);
        let swap = edge.swap();
        for (idx, &q) in analysis.almost_bases().iter().enumerate() {
            if analysis.is_branching(idx) {
                continue;
            }
            let image = analysis.image(idx, Side::Base);
            let moved_image = swap.apply_to_set(image);
            if moved_image != image && m.is_basis(moved_image) {
                let d = image.difference(q).iter().next().unwrap();
                assert_ne!(d, edge.lower());
                assert_ne!(d, edge.upper());
            }
        }
    });
}

#[test]
fn balanced_bases_transport_their_fibers() {
    for_each_edge(|m, edge| {
        let analysis = EdgeAnalysis::build(m, edge);
        let swap = edge.swap();
        for &b in m.bases() {
            if !is_balanced_basis(m, edge, b, Side::Base).unwrap() {
                continue;
            }
            let moved = swap.apply_to_set(b);
            let mut carried: Vec<_> = analysis
                .fiber(b, Side::Base)
                .into_iter()
                .map(|q| swap.apply_to_set(q))
                .collect();
            carried.sort_unstable();
            let mut expected = analysis.fiber(moved, Side::Swapped);
            expected.sort_unstable();
            assert_eq!(carried, expected);
        }
    });
}

#[test]
fn basis_balance_flips_sides_with_the_swap() {
    // b is balanced on the base side exactly when its swap is balanced on
    // the swapped side
    for_each_edge(|m, edge| {
        let swap = edge.swap();
        for &b in m.bases() {
            let moved = swap.apply_to_set(b);
            if !m.is_basis(moved) {
                continue;
            }
            assert_eq!(
                is_balanced_basis(m, edge, b, Side::Base).unwrap(),
                is_balanced_basis(m, edge, moved, Side::Swapped).unwrap()
            );
        }
    });
}

#[test]
fn branching_images_flip_and_split_the_pair() {
    for_each_edge(|m, edge| {
        let analysis = EdgeAnalysis::build(m, edge);
        let swap = edge.swap();
        for side in [Side::Base, Side::Swapped] {
            for &b in analysis.branching_images(side) {
                let moved = swap.apply_to_set(b);
                assert!(m.is_basis(moved));
                assert_ne!(moved, b);
                let has_lower = b.contains(edge.lower());
                let has_upper = b.contains(edge.upper());
                assert!(has_lower ^ has_upper);
            }
        }
        // a basis is a swapped-side image exactly when its swap is a
        // base-side image
        for &b in m.bases() {
            let moved = swap.apply_to_set(b);
            let swapped_side = analysis.branching_images(Side::Swapped).contains(&b);
            let base_side = analysis.branching_images(Side::Base).contains(&moved);
            assert_eq!(swapped_side, base_side);
        }
    });
}

#[test]
fn non_branching_images_keep_their_fibers() {
    for_each_edge(|m, edge| {
        let analysis = EdgeAnalysis::build(m, edge);
        for &b in m.bases() {
            if analysis.is_branching_image(b) {
                continue;
            }
            let mut lo = analysis.fiber(b, Side::Base);
            let mut hi = analysis.fiber(b, Side::Swapped);
            lo.sort_unstable();
            hi.sort_unstable();
            assert_eq!(lo, hi);
        }
    });
}

#[test]
fn forced_balance_holds_across_the_corpus() {
    let mut hypothesis_hits = 0usize;
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            for l in canonical_linkings(m) {
                let report = check_forced_balance(&l, edge).unwrap();
                assert!(report.passed, "failures {:?}", report.failures);
                hypothesis_hits += report.hits;
            }
        }
    }
    // the sweep must exercise the non-vacuous case somewhere
    assert!(hypothesis_hits > 0);
}

#[test]
fn linked_branching_images_force_balanced_bases() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            for l in canonical_linkings(m) {
                let target_analysis = EdgeAnalysis::build(l.target(), edge);
                for (i, &b) in m.bases().iter().enumerate() {
                    if target_analysis.is_branching_image(l.image(i)) {
                        assert!(is_balanced_basis(m, edge, b, Side::Base).unwrap());
                        assert!(is_balanced_basis(m, edge, b, Side::Swapped).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn moved_bases_biject_their_fibers() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            let analysis = EdgeAnalysis::build(m, edge);
            let swap = edge.swap();
            for l in canonical_linkings(m) {
                let target_analysis = EdgeAnalysis::build(l.target(), edge);
                for (i, &b) in m.bases().iter().enumerate() {
                    let moves = analysis.is_branching_image(b)
                        || target_analysis.is_branching_image(l.image(i));
                    if !moves {
                        continue;
                    }
                    let moved = swap.apply_to_set(b);
                    let mut carried: Vec<_> = analysis
                        .fiber(b, Side::Base)
                        .into_iter()
                        .map(|q| swap.apply_to_set(q))
                        .collect();
                    carried.sort_unstable();
                    let mut expected = analysis.fiber(moved, Side::Swapped);
                    expected.sort_unstable();
                    assert_eq!(carried, expected);
                }
            }
        }
    }
}

#[test]
fn involution_moves_exactly_the_linked_branching_images() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            let analysis = EdgeAnalysis::build(m, edge);
            for l in canonical_linkings(m) {
                let target_analysis = EdgeAnalysis::build(l.target(), edge);
                let sigma = edge_involution(&l, edge).unwrap();
                for (i, &b) in m.bases().iter().enumerate() {
                    let should_move = analysis.is_branching_image(b)
                        || target_analysis.is_branching_image(l.image(i));
                    assert_eq!(sigma[i] != i, should_move);
                }
            }
        }
    }
}

#[test]
fn moved_bases_swap_back() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            let swap = edge.swap();
            for l in canonical_linkings(m) {
                let sigma = edge_involution(&l, edge).unwrap();
                for (i, &b) in m.bases().iter().enumerate() {
                    if sigma[i] != i {
                        assert_eq!(m.bases()[sigma[i]], swap.apply_to_set(b));
                        assert_eq!(sigma[sigma[i]], i);
                    }
                }
            }
        }
    }
}

#[test]
fn involution_squares_to_the_identity() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            for l in canonical_linkings(m) {
                let sigma = edge_involution(&l, edge).unwrap();
                for i in 0..sigma.len() {
                    assert_eq!(sigma[sigma[i]], i);
                }
            }
        }
    }
}

#[test]
fn involution_transports_all_activity_data() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            for l in canonical_linkings(m) {
                let report = verify_edge_involution(&l, edge, true).unwrap();
                assert!(
                    report.passed,
                    "bases {:?}, failures {:?}",
                    m.bases(),
                    report.failures
                );
            }
        }
    }
}

#[test]
fn whitney_multiset_is_edge_invariant() {
    for m in matroid_corpus() {
        for edge in undirected_edges(m.ground().len()) {
            for l in canonical_linkings(m) {
                assert_eq!(
                    whitney_multiset(&l, edge.base()).unwrap(),
                    whitney_multiset(&l, edge.swapped()).unwrap()
                );
            }
        }
    }
}
