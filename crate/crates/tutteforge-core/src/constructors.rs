//! Pre-matroids from standard sources: graphs, uniform parameters, GF(2)
//! matrices.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::prematroid::PreMatroid;
use crate::subset::{ElemSubset, GroundSet};

/// A multigraph with labeled edges; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<GraphEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub id: String,
    pub u: usize,
    pub v: usize,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<GraphEdge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::BadParameters(alloc::format!(
                    "edge `{}` has an endpoint outside 0..{vertex_count}",
                    e.id
                )));
            }
            if edges[..i].iter().any(|other| other.id == e.id) {
                return Err(Error::BadParameters(alloc::format!(
                    "duplicate edge id `{}`",
                    e.id
                )));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// Unlabeled construction; edges get ids `e1..`.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| GraphEdge {
                id: alloc::format!("e{}", i + 1),
                u,
                v,
            })
            .collect();
        Graph::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, idx: usize) -> bool {
        self.edges[idx].u == self.edges[idx].v
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.unite(e.u, e.v);
        }
        uf.component_count()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.component_count() == 1
    }

    /// Whether deleting the edge increases the number of components.
    pub fn is_bridge(&self, idx: usize) -> bool {
        if self.is_loop(idx) {
            return false;
        }
        let before = self.component_count();
        self.delete_edge(idx).component_count() > before
    }

    pub fn delete_edge(&self, idx: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Contract the edge, merging its endpoints. Contracting a loop deletes it.
    pub fn contract_edge(&self, idx: usize) -> Graph {
        let (u, v) = (self.edges[idx].u, self.edges[idx].v);
        if u == v {
            return self.delete_edge(idx);
        }
        let keep = u.min(v);
        let gone = u.max(v);
        let relabel = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, e)| GraphEdge {
                id: e.id.clone(),
                u: relabel(e.u),
                v: relabel(e.v),
            })
            .collect();
        Graph {
            vertex_count: self.vertex_count - 1,
            edges,
        }
    }

    /// Rank of the whole edge set: vertices minus components.
    pub fn forest_rank(&self) -> usize {
        self.vertex_count - self.component_count()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when the two were already connected.
    pub(crate) fn unite(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub(crate) fn component_count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }

    fn clone_state(&self) -> UnionFind {
        UnionFind {
            parent: self.parent.clone(),
        }
    }
}

/// The pre-matroid on the edge set whose bases are the edge sets of maximal
/// spanning forests (spanning trees when the graph is connected).
pub fn graphic_matroid(g: &Graph, budget: Budget) -> Result<PreMatroid> {
    if g.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    if g.edges.len() > 64 {
        return Err(Error::BadParameters(
            "graphic matroids support at most 64 edges".to_string(),
        ));
    }
    let ground = GroundSet::new(g.edges.iter().map(|e| e.id.clone()))?;
    let rank = g.forest_rank();
    let mut bases = Vec::new();
    let mut steps_left = budget.subsets;
    let mut uf = UnionFind::new(g.vertex_count);
    enumerate_forests(
        g,
        rank,
        0,
        0,
        ElemSubset::EMPTY,
        &mut uf,
        &mut bases,
        &mut steps_left,
        budget,
    )?;
    if rank == 0 {
        bases.push(ElemSubset::EMPTY);
    }
    PreMatroid::from_bases(ground, bases)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_forests(
    g: &Graph,
    rank: usize,
    idx: usize,
    chosen: usize,
    acc: ElemSubset,
    uf: &mut UnionFind,
    out: &mut Vec<ElemSubset>,
    steps_left: &mut u64,
    budget: Budget,
) -> Result<()> {
    if *steps_left == 0 {
        return Err(Error::BudgetExceeded {
            needed: budget.subsets as u128 + 1,
            limit: budget.subsets,
        });
    }
    *steps_left -= 1;
    if chosen == rank {
        out.push(acc);
        return Ok(());
    }
    if idx >= g.edges.len() || chosen + (g.edges.len() - idx) < rank {
        return Ok(());
    }
    let e = &g.edges[idx];
    // Take the edge when it joins two components.
    if e.u != e.v {
        let mut taken = uf.clone_state();
        if taken.unite(e.u, e.v) {
            enumerate_forests(
                g,
                rank,
                idx + 1,
                chosen + 1,
                acc.with(idx as u8),
                &mut taken,
                out,
                steps_left,
                budget,
            )?;
        }
    }
    enumerate_forests(g, rank, idx + 1, chosen, acc, uf, out, steps_left, budget)
}

/// All `k`-subsets of an `n`-element ground set labeled `1..=n`.
pub fn uniform_matroid(k: u32, n: u32, budget: Budget) -> Result<PreMatroid> {
    if k > n || n == 0 || n > 64 {
        return Err(Error::BadParameters(alloc::format!(
            "uniform parameters must satisfy 0 <= k <= n <= 64 with n >= 1, got ({k}, {n})"
        )));
    }
    budget.check(binomial_u128(n, k))?;
    let ground = GroundSet::numbered(n as usize)?;
    let bases = k_subset_bits(n, k);
    PreMatroid::from_bases(ground, bases)
}

/// All bit patterns with `k` of the low `n` bits set, ascending.
pub(crate) fn k_subset_bits(n: u32, k: u32) -> Vec<ElemSubset> {
    if k == 0 {
        return alloc::vec![ElemSubset::EMPTY];
    }
    if k == n {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        return alloc::vec![ElemSubset(full)];
    }
    let mut out = Vec::new();
    let mut c: u64 = (1u64 << k) - 1;
    let top: u64 = ((1u64 << k) - 1) << (n - k);
    loop {
        out.push(ElemSubset(c));
        if c == top {
            break;
        }
        // Gosper's hack: next pattern with the same popcount.
        let low = c & c.wrapping_neg();
        let carry = c + low;
        c = carry | (((c ^ carry) / low) >> 2);
    }
    out
}

pub(crate) fn binomial_u128(n: u32, k: u32) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// The pre-matroid of maximal linearly independent column subsets over
/// GF(2). Columns are bit vectors (`height` rows, rows in the low bits).
pub fn gf2_linear_matroid(columns: &[u64], height: u32, budget: Budget) -> Result<PreMatroid> {
    if columns.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if columns.len() > 64 {
        return Err(Error::BadParameters(
            "GF(2) matroids support at most 64 columns".to_string(),
        ));
    }
    if height > 64 || columns.iter().any(|&c| height < 64 && c >> height != 0) {
        return Err(Error::BadParameters(
            "column has bits above the stated height".to_string(),
        ));
    }
    let n = columns.len() as u32;
    let rank = gf2_rank(columns.iter().copied());
    budget.check(binomial_u128(n, rank))?;
    let bases: Vec<ElemSubset> = k_subset_bits(n, rank)
        .into_iter()
        .filter(|s| gf2_rank(s.iter().map(|i| columns[i as usize])) == rank)
        .collect();
    let ground = GroundSet::numbered(columns.len())?;
    PreMatroid::from_bases(ground, bases)
}

fn gf2_rank(columns: impl Iterator<Item = u64>) -> u32 {
    let mut pivots: Vec<u64> = Vec::new();
    for mut col in columns {
        for &p in &pivots {
            let lead = 1u64 << (63 - p.leading_zeros());
            if col & lead != 0 {
                col ^= p;
            }
        }
        if col != 0 {
            pivots.push(col);
        }
    }
    pivots.len() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn graphic_matroid_of_triangle_is_uniform() {
        let m = graphic_matroid(&triangle(), Budget::DEFAULT).unwrap();
        let u = uniform_matroid(2, 3, Budget::DEFAULT).unwrap();
        assert_eq!(m.bases(), u.bases());
        assert!(m.check_exchange().holds);
    }

    #[test]
    fn path_has_single_basis() {
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = graphic_matroid(&g, Budget::DEFAULT).unwrap();
        assert_eq!(m.bases(), [ElemSubset(0b111)]);
    }

    #[test]
    fn single_loop_gives_rank_zero() {
        let g = Graph::from_pairs(1, &[(0, 0)]).unwrap();
        let m = graphic_matroid(&g, Budget::DEFAULT).unwrap();
        assert_eq!(m.bases(), [ElemSubset::EMPTY]);
    }

    #[test]
    fn no_edges_is_rejected() {
        let g = Graph::from_pairs(2, &[]).unwrap();
        assert_eq!(graphic_matroid(&g, Budget::DEFAULT), Err(Error::NoEdges));
    }

    #[test]
    fn uniform_cases() {
        let u = uniform_matroid(2, 3, Budget::DEFAULT).unwrap();
        let bits: Vec<u64> = u.bases().iter().map(|s| s.bits()).collect();
        assert_eq!(bits, [0b011, 0b101, 0b110]);
        let zero = uniform_matroid(0, 2, Budget::DEFAULT).unwrap();
        assert_eq!(zero.bases(), [ElemSubset::EMPTY]);
        assert!(uniform_matroid(3, 2, Budget::DEFAULT).is_err());
    }

    #[test]
    fn gf2_cases() {
        // identity 2x2 plus the all-ones column: any two columns independent
        let m = gf2_linear_matroid(&[0b01, 0b10, 0b11], 2, Budget::DEFAULT).unwrap();
        let u = uniform_matroid(2, 3, Budget::DEFAULT).unwrap();
        assert_eq!(m.bases(), u.bases());

        let zero = gf2_linear_matroid(&[0], 1, Budget::DEFAULT).unwrap();
        assert_eq!(zero.bases(), [ElemSubset::EMPTY]);

        let parallel = gf2_linear_matroid(&[1, 1], 1, Budget::DEFAULT).unwrap();
        let bits: Vec<u64> = parallel.bases().iter().map(|s| s.bits()).collect();
        assert_eq!(bits, [0b01, 0b10]);

        assert_eq!(
            gf2_linear_matroid(&[], 1, Budget::DEFAULT),
            Err(Error::EmptyMatrix)
        );
    }

    #[test]
    fn constructors_yield_matroids() {
        for m in [
            graphic_matroid(&triangle(), Budget::DEFAULT).unwrap(),
            uniform_matroid(2, 4, Budget::DEFAULT).unwrap(),
            gf2_linear_matroid(&[0b01, 0b10, 0b11, 0b01], 2, Budget::DEFAULT).unwrap(),
        ] {
            assert!(m.check_exchange().holds);
            assert!(m.check_symmetric_exchange().holds);
        }
    }

    #[test]
    fn graph_editing() {
        let g = triangle();
        assert!(!g.is_bridge(0));
        let cut = g.delete_edge(0);
        assert!(cut.is_bridge(0));
        let contracted = g.contract_edge(0);
        assert_eq!(contracted.vertex_count(), 2);
        assert_eq!(contracted.edge_count(), 2);
        // remaining edges are now parallel
        assert!(!contracted.is_loop(0));
        let doubled = contracted.contract_edge(0);
        assert!(doubled.is_loop(0));
    }
}
