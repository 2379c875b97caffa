//! Deterministic families of small instances used by the verification
//! sweeps: uniform matroids, all connected multigraphs with few edges up to
//! isomorphism, and seeded random GF(2) matroids.

use alloc::vec::Vec;

use crate::budget::Budget;
use crate::constructors::{gf2_linear_matroid, graphic_matroid, uniform_matroid, Graph};
use crate::prematroid::{validate_prematroid, PreMatroid};
use crate::rng::XorShift64Star;
use crate::subset::GroundSet;

/// Seed for the random members of [`standard_corpus`].
pub const CORPUS_SEED: u64 = 424242;

/// Every uniform matroid with `0 <= k <= n` and `1 <= n <= n_max`.
pub fn uniform_family_up_to(n_max: u32) -> Vec<PreMatroid> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            out.push(uniform_matroid(k, n, Budget::DEFAULT).expect("small parameters"));
        }
    }
    out
}

/// Connected multigraphs with `1..=max_edges` edges, one per isomorphism
/// class, loops and parallel edges included. A graph is kept when its sorted
/// edge multiset is lexicographically minimal across all vertex relabelings.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for v in 1..=max_edges + 1 {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i..v).map(move |j| (i, j))).collect();
        for e in v.saturating_sub(1).max(1)..=max_edges {
            let mut chosen = Vec::with_capacity(e);
            pick_multisets(&pairs, e, 0, &mut chosen, &mut |edges| {
                if is_connected(v, edges) && is_canonical(v, edges) {
                    out.push(Graph::from_pairs(v, edges).expect("valid endpoints"));
                }
            });
        }
    }
    out
}

fn pick_multisets(
    pairs: &[(usize, usize)],
    remaining: usize,
    start: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for idx in start..pairs.len() {
        chosen.push(pairs[idx]);
        pick_multisets(pairs, remaining - 1, idx, chosen, emit);
        chosen.pop();
    }
}

fn is_connected(v: usize, edges: &[(usize, usize)]) -> bool {
    if v <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..v).all(|x| find(&mut parent, x) == 0)
}

fn is_canonical(v: usize, edges: &[(usize, usize)]) -> bool {
    let normalized: Vec<(usize, usize)> = edges.to_vec();
    let mut perm: Vec<usize> = (0..v).collect();
    // Heap's algorithm over all vertex relabelings.
    let mut stack = alloc::vec![0usize; v];
    let mut i = 0;
    loop {
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (pa, pb) = (perm[a], perm[b]);
                (pa.min(pb), pa.max(pb))
            })
            .collect();
        relabeled.sort_unstable();
        if relabeled < normalized {
            return false;
        }
        // advance permutation
        loop {
            if i >= v {
                return true;
            }
            if stack[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(stack[i], i);
                }
                stack[i] += 1;
                i = 0;
                break;
            }
            stack[i] = 0;
            i += 1;
        }
    }
}

/// Graphic matroids of [`connected_multigraphs`].
pub fn graphic_family(max_edges: usize) -> Vec<PreMatroid> {
    connected_multigraphs(max_edges)
        .iter()
        .map(|g| graphic_matroid(g, Budget::DEFAULT).expect("small graph"))
        .collect()
}

/// `count` column-space matroids of random GF(2) matrices of the given
/// shape, drawn from the pinned generator.
pub fn random_gf2_matroids(count: usize, rows: u32, cols: usize, seed: u64) -> Vec<PreMatroid> {
    let mut rng = XorShift64Star::new(seed);
    let mask = (1u64 << rows) - 1;
    (0..count)
        .map(|_| {
            let columns: Vec<u64> = (0..cols).map(|_| rng.next_u64() & mask).collect();
            gf2_linear_matroid(&columns, rows, Budget::DEFAULT).expect("small matrix")
        })
        .collect()
}

/// The verification corpus: all uniform matroids with at most 5 elements,
/// graphic matroids of all connected multigraphs with at most 5 edges, and
/// 20 seeded random GF(2) matroids from 3x5 matrices.
pub fn standard_corpus() -> Vec<PreMatroid> {
    let mut out = uniform_family_up_to(5);
    out.extend(graphic_family(5));
    out.extend(random_gf2_matroids(20, 3, 5, CORPUS_SEED));
    out
}

/// The two-basis family `{{1,2},{3,4}}`: fails the exchange property.
pub fn disjoint_pair_prematroid() -> PreMatroid {
    let g = GroundSet::numbered(4).expect("small ground");
    validate_prematroid(g, &[alloc::vec!["1", "2"], alloc::vec!["3", "4"]]).expect("valid family")
}

/// A non-matroid whose Tutte expansion genuinely depends on the order.
pub fn order_sensitive_prematroid() -> PreMatroid {
    let g = GroundSet::numbered(4).expect("small ground");
    validate_prematroid(
        g,
        &[
            alloc::vec!["1", "2"],
            alloc::vec!["1", "3"],
            alloc::vec!["2", "3"],
            alloc::vec!["1", "4"],
        ],
    )
    .expect("valid family")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_members_are_matroids() {
        for m in standard_corpus() {
            assert!(m.ground().len() <= 5);
            assert!(m.check_exchange().holds);
        }
    }

    #[test]
    fn multigraph_enumeration_finds_the_basics() {
        let graphs = connected_multigraphs(2);
        // edge, loop, two loops, edge+loop, parallel pair, path
        assert!(graphs.iter().all(|g| g.is_connected()));
        assert_eq!(graphs.len(), 6);
    }

    #[test]
    fn enumeration_is_deduplicated() {
        // the 3-path and the 3-star are the only simple trees on 4 vertices
        let trees: Vec<_> = connected_multigraphs(3)
            .into_iter()
            .filter(|g| g.vertex_count() == 4)
            .collect();
        assert_eq!(trees.len(), 2);
    }

    #[test]
    fn gf2_family_is_deterministic() {
        let a = random_gf2_matroids(5, 3, 5, 99);
        let b = random_gf2_matroids(5, 3, 5, 99);
        assert_eq!(a, b);
    }

    #[test]
    fn named_prematroids() {
        assert!(!disjoint_pair_prematroid().check_exchange().holds);
        assert!(!order_sensitive_prematroid().check_exchange().holds);
    }
}
