//! Shared fixtures for the property suites.
#![allow(dead_code)]

use std::sync::OnceLock;

use tutteforge_core::corpus;
use tutteforge_core::{edges_at, LinearOrder, Linking, OrderEdge, PreMatroid};

static CORPUS: OnceLock<Vec<PreMatroid>> = OnceLock::new();
static GRAPHS: OnceLock<Vec<tutteforge_core::Graph>> = OnceLock::new();
static EDGES: OnceLock<Vec<Vec<OrderEdge>>> = OnceLock::new();
static ORDERS: OnceLock<Vec<Vec<LinearOrder>>> = OnceLock::new();

/// All corpus matroids (ground sets of at most 5 elements).
pub fn matroid_corpus() -> &'static [PreMatroid] {
    CORPUS.get_or_init(corpus::standard_corpus)
}

/// All connected multigraphs with at most 5 edges, up to isomorphism.
pub fn graph_corpus() -> &'static [tutteforge_core::Graph] {
    GRAPHS.get_or_init(|| corpus::connected_multigraphs(5))
}

/// Every linear order on `n` elements.
pub fn all_orders(n: usize) -> &'static [LinearOrder] {
    let table = ORDERS.get_or_init(|| (0..=5).map(build_orders).collect());
    &table[n]
}

fn build_orders(n: usize) -> Vec<LinearOrder> {
    let mut seq: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    permute(&mut seq, 0, &mut out);
    out
}

fn permute(seq: &mut Vec<u8>, k: usize, out: &mut Vec<LinearOrder>) {
    if k == seq.len() {
        out.push(LinearOrder::from_sequence(seq).unwrap());
        return;
    }
    for i in k..seq.len() {
        seq.swap(k, i);
        permute(seq, k + 1, out);
        seq.swap(k, i);
    }
}

/// Every edge of the graph of linear orders on `n` elements, one
/// representative per undirected edge.
pub fn undirected_edges(n: usize) -> &'static [OrderEdge] {
    let table = EDGES.get_or_init(|| {
        (0..=5)
            .map(|n| {
                let mut edges = Vec::new();
                for order in build_orders(n) {
                    for edge in edges_at(&order) {
                        if edge.base().sequence() < edge.swapped().sequence() {
                            edges.push(edge);
                        }
                    }
                }
                edges
            })
            .collect()
    });
    &table[n]
}

/// The identity and complementation linkings of a pre-matroid.
pub fn canonical_linkings(m: &PreMatroid) -> [Linking; 2] {
    [Linking::identity(m), Linking::complement(m)]
}

/// Number of element pairs on which the two orders disagree.
pub fn inversions(a: &LinearOrder, b: &LinearOrder) -> usize {
    let n = a.len() as u8;
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            if a.less(x, y) != b.less(x, y) {
                count += 1;
            }
        }
    }
    count
}
