//! Independent routes to the Tutte polynomial, used to cross-validate the
//! activity expansion: the corank-nullity subset expansion for matroids and
//! deletion-contraction for graphs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::constructors::Graph;
use crate::error::{Error, Result};
use crate::multiset::BivarMultiSet;
use crate::prematroid::PreMatroid;
use crate::subset::ElemSubset;

/// Bivariate polynomial with signed arbitrary-precision coefficients, for
/// the intermediate arithmetic of the subset expansion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedBivarPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl SignedBivarPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, i: u32, j: u32, value: BigInt) {
        if value == BigInt::ZERO {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_insert_with(|| BigInt::ZERO);
        *slot += value;
        if *slot == BigInt::ZERO {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or(BigInt::ZERO)
    }

    /// Narrow into counted terms, rejecting negative or oversized
    /// coefficients.
    pub fn into_multiset(self) -> Result<BivarMultiSet> {
        let mut out = BivarMultiSet::new();
        for ((i, j), value) in self.coeffs {
            if value < BigInt::ZERO {
                return Err(Error::NegativeCoefficient);
            }
            let count = u64::try_from(&value).map_err(|_| Error::Overflow)?;
            out.add((i, j), count)?;
        }
        Ok(out)
    }
}

/// Rank of a subset in a matroid: the size of its largest independent
/// subset, which equals the largest overlap with a basis.
pub fn rank_of(m: &PreMatroid, a: ElemSubset) -> Result<u32> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid);
    }
    Ok(m.bases()
        .iter()
        .map(|&b| b.intersection(a).len())
        .max()
        .expect("basis family is non-empty"))
}

/// The Tutte polynomial through the corank-nullity subset expansion: the sum
/// over all subsets `A` of `(x-1)^(r(X)-r(A)) (y-1)^(|A|-r(A))`.
///
/// Subsets are tallied by their `(corank, nullity)` pair first, so the
/// binomial expansion happens once per pair rather than once per subset.
pub fn tutte_corank_nullity(m: &PreMatroid, budget: Budget) -> Result<BivarMultiSet> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid);
    }
    let n = m.ground().len() as u32;
    budget.check(1u128 << n)?;
    let full_rank = rank_of(m, m.ground().full())?;

    let mut tally: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let top = m.ground().mask();
    let mut bits = 0u64;
    loop {
        let a = ElemSubset(bits);
        let r = m
            .bases()
            .iter()
            .map(|&b| b.intersection(a).len())
            .max()
            .expect("non-empty");
        let corank = full_rank - r;
        let nullity = a.len() - r;
        *tally.entry((corank, nullity)).or_insert(0) += 1;
        if bits == top {
            break;
        }
        bits += 1;
    }

    let mut poly = SignedBivarPoly::new();
    for (&(p, q), &count) in &tally {
        // (x-1)^p (y-1)^q expanded over the tally count
        for i in 0..=p {
            for j in 0..=q {
                let sign = if (p - i + q - j) % 2 == 0 { 1 } else { -1 };
                let c = binomial_bigint(p, i) * binomial_bigint(q, j) * BigInt::from(sign);
                poly.add_term(i, j, c * BigInt::from(count));
            }
        }
    }
    poly.into_multiset()
}

fn binomial_bigint(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The Tutte polynomial of a graph by deletion and contraction: bridges
/// contribute a factor `x`, loops a factor `y`, and any other edge splits
/// the sum into deletion plus contraction. The edgeless graph contributes 1.
pub fn tutte_deletion_contraction(g: &Graph) -> BivarMultiSet {
    let mut acc = BivarMultiSet::new();
    // (x exponent, y exponent, remaining graph) work list
    let mut stack: Vec<(u32, u32, Graph)> = alloc::vec![(0, 0, g.clone())];
    while let Some((xs, ys, g)) = stack.pop() {
        match first_ordinary_edge(&g) {
            None => {
                // only bridges and loops remain
                let mut xs = xs;
                let mut ys = ys;
                for idx in 0..g.edge_count() {
                    if g.is_loop(idx) {
                        ys += 1;
                    } else {
                        xs += 1;
                    }
                }
                acc.add((xs, ys), 1).expect("term count fits in u64");
            }
            Some(idx) => {
                stack.push((xs, ys, g.delete_edge(idx)));
                stack.push((xs, ys, g.contract_edge(idx)));
            }
        }
    }
    acc
}

/// Lowest-index edge that is neither a loop nor a bridge.
fn first_ordinary_edge(g: &Graph) -> Option<usize> {
    (0..g.edge_count()).find(|&idx| !g.is_loop(idx) && !g.is_bridge(idx))
}

/// Number of spanning trees of a connected graph, by the recursion
/// `count(G) = count(G - e) + count(G / e)` on ordinary edges; loops are
/// dropped and bridges contracted.
pub fn spanning_tree_count(g: &Graph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    fn go(g: &Graph) -> Result<u64> {
        match first_ordinary_edge(g) {
            None => {
                // a tree decorated with loops: exactly one spanning tree
                Ok(1)
            }
            Some(idx) => {
                let deleted = go(&g.delete_edge(idx))?;
                let contracted = go(&g.contract_edge(idx))?;
                deleted.checked_add(contracted).ok_or(Error::Overflow)
            }
        }
    }
    go(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{graphic_matroid, uniform_matroid};

    fn k3() -> Graph {
        Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rank_examples() {
        let m = uniform_matroid(2, 3, Budget::DEFAULT).unwrap();
        assert_eq!(rank_of(&m, ElemSubset(0b111)).unwrap(), 2);
        assert_eq!(rank_of(&m, ElemSubset::EMPTY).unwrap(), 0);
        assert_eq!(rank_of(&m, ElemSubset(0b010)).unwrap(), 1);
    }

    #[test]
    fn corank_nullity_small_cases() {
        let u23 = uniform_matroid(2, 3, Budget::DEFAULT).unwrap();
        assert_eq!(
            tutte_corank_nullity(&u23, Budget::DEFAULT)
                .unwrap()
                .render(),
            "x^2 + x + y"
        );
        let free = uniform_matroid(3, 3, Budget::DEFAULT).unwrap();
        assert_eq!(
            tutte_corank_nullity(&free, Budget::DEFAULT)
                .unwrap()
                .render(),
            "x^3"
        );
        let zero = uniform_matroid(0, 1, Budget::DEFAULT).unwrap();
        assert_eq!(
            tutte_corank_nullity(&zero, Budget::DEFAULT)
                .unwrap()
                .render(),
            "y"
        );
    }

    #[test]
    fn deletion_contraction_small_cases() {
        assert_eq!(tutte_deletion_contraction(&k3()).render(), "x^2 + x + y");
        let bridge = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(tutte_deletion_contraction(&bridge).render(), "x");
        let lp = Graph::from_pairs(1, &[(0, 0)]).unwrap();
        assert_eq!(tutte_deletion_contraction(&lp).render(), "y");
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(spanning_tree_count(&k3()).unwrap(), 3);
        let path = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&path).unwrap(), 1);
        assert_eq!(spanning_tree_count(&k4()).unwrap(), 16);
        let split = Graph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&split), Err(Error::Disconnected));
    }

    #[test]
    fn tree_count_matches_basis_count() {
        for g in [k3(), k4()] {
            let m = graphic_matroid(&g, Budget::DEFAULT).unwrap();
            let count = spanning_tree_count(&g).unwrap();
            assert_eq!(count, m.basis_count() as u64);
            let t = tutte_deletion_contraction(&g);
            assert_eq!(t.evaluate(1, 1).unwrap(), count as i128);
        }
    }

    #[test]
    fn non_matroids_are_rejected() {
        let g = crate::subset::GroundSet::numbered(4).unwrap();
        let bad = crate::prematroid::validate_prematroid(
            g,
            &[alloc::vec!["1", "2"], alloc::vec!["3", "4"]],
        )
        .unwrap();
        assert_eq!(
            tutte_corank_nullity(&bad, Budget::DEFAULT),
            Err(Error::NotAMatroid)
        );
        assert_eq!(rank_of(&bad, ElemSubset(0b1111)), Err(Error::NotAMatroid));
    }

    #[test]
    fn signed_poly_rejects_negatives() {
        let mut p = SignedBivarPoly::new();
        p.add_term(1, 0, BigInt::from(-1));
        assert_eq!(p.into_multiset(), Err(Error::NegativeCoefficient));
    }
}
