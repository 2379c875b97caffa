//! Linear orders on the ground set, the permutation action on them, and the
//! graph whose edges swap two consecutive elements.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::subset::ElemSubset;

/// A total order on element indices `0..n`, stored as a rank array:
/// `rank[e]` is the position of element `e`, `0` being smallest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    rank: Vec<u8>,
}

impl LinearOrder {
    /// The order of the element indices themselves.
    pub fn natural(n: usize) -> Self {
        LinearOrder {
            rank: (0..n as u8).collect(),
        }
    }

    /// Build from the element sequence listed smallest first.
    pub fn from_sequence(seq: &[u8]) -> Result<Self> {
        let n = seq.len();
        let mut rank = alloc::vec![u8::MAX; n];
        for (pos, &e) in seq.iter().enumerate() {
            if (e as usize) >= n || rank[e as usize] != u8::MAX {
                return Err(Error::NotABijection);
            }
            rank[e as usize] = pos as u8;
        }
        Ok(LinearOrder { rank })
    }

    pub fn from_ranks(rank: Vec<u8>) -> Result<Self> {
        let mut seen = alloc::vec![false; rank.len()];
        for &r in &rank {
            if (r as usize) >= rank.len() || seen[r as usize] {
                return Err(Error::NotABijection);
            }
            seen[r as usize] = true;
        }
        Ok(LinearOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn position(&self, e: u8) -> u8 {
        self.rank[e as usize]
    }

    pub fn less(&self, a: u8, b: u8) -> bool {
        self.rank[a as usize] < self.rank[b as usize]
    }

    /// Elements listed smallest first.
    pub fn sequence(&self) -> Vec<u8> {
        let mut seq = alloc::vec![0u8; self.rank.len()];
        for (e, &r) in self.rank.iter().enumerate() {
            seq[r as usize] = e as u8;
        }
        seq
    }

    /// The element of `set` with the smallest position.
    pub fn min_in(&self, set: ElemSubset) -> Option<u8> {
        set.iter().min_by_key(|&e| self.rank[e as usize])
    }

    /// Whether `a` and `b` occupy neighbouring positions.
    pub fn consecutive(&self, a: u8, b: u8) -> Result<bool> {
        if a == b {
            return Err(Error::SameElement);
        }
        let d = self.rank[a as usize].abs_diff(self.rank[b as usize]);
        Ok(d == 1)
    }

    /// Pairs `(a, b)` with `b` immediately after `a`, by position.
    pub fn consecutive_pairs(&self) -> Vec<(u8, u8)> {
        let seq = self.sequence();
        seq.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// A bijection of the element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n as u8).collect(),
        }
    }

    pub fn from_map(map: Vec<u8>) -> Result<Self> {
        let mut seen = alloc::vec![false; map.len()];
        for &v in &map {
            if (v as usize) >= map.len() || seen[v as usize] {
                return Err(Error::NotABijection);
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { map })
    }

    pub fn transposition(n: usize, a: u8, b: u8) -> Result<Self> {
        if a == b {
            return Err(Error::SameElement);
        }
        let mut map: Vec<u8> = (0..n as u8).collect();
        map.swap(a as usize, b as usize);
        Ok(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, e: u8) -> u8 {
        self.map[e as usize]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&e| self.map[e as usize]).collect(),
        }
    }

    pub fn apply_to_set(&self, s: ElemSubset) -> ElemSubset {
        let mut out = ElemSubset::EMPTY;
        for e in s.iter() {
            out = out.with(self.map[e as usize]);
        }
        out
    }

    /// The unique order making this permutation an isomorphism of ordered
    /// sets from `order` to the result.
    pub fn apply_to_order(&self, order: &LinearOrder) -> Result<LinearOrder> {
        if self.map.len() != order.len() {
            return Err(Error::GroundMismatch);
        }
        let mut rank = alloc::vec![0u8; self.map.len()];
        for e in 0..self.map.len() {
            rank[self.map[e] as usize] = order.rank[e];
        }
        Ok(LinearOrder { rank })
    }
}

/// The swap of two distinct elements, applied to elements or subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transposition {
    pub a: u8,
    pub b: u8,
}

impl Transposition {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a == b {
            return Err(Error::SameElement);
        }
        Ok(Transposition { a, b })
    }

    pub fn apply(&self, e: u8) -> u8 {
        if e == self.a {
            self.b
        } else if e == self.b {
            self.a
        } else {
            e
        }
    }

    /// Moves a subset: a no-op unless exactly one of the pair is present.
    pub fn apply_to_set(&self, s: ElemSubset) -> ElemSubset {
        match (s.contains(self.a), s.contains(self.b)) {
            (true, false) => s.without(self.a).with(self.b),
            (false, true) => s.without(self.b).with(self.a),
            _ => s,
        }
    }

    pub fn as_permutation(&self, n: usize) -> Permutation {
        Permutation::transposition(n, self.a, self.b).expect("distinct by construction")
    }
}

/// Two orders differing only in a consecutive pair, plus that pair.
///
/// Normalized so that `lower` comes first in `base` (and therefore `upper`
/// comes first in `swapped`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderEdge {
    base: LinearOrder,
    swapped: LinearOrder,
    lower: u8,
    upper: u8,
}

/// Selects one of the two orders of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Base,
    Swapped,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Base => Side::Swapped,
            Side::Swapped => Side::Base,
        }
    }
}

impl OrderEdge {
    /// Edge at `order` swapping the elements at positions `pos` and `pos+1`.
    pub fn at_position(order: &LinearOrder, pos: u8) -> Self {
        let seq = order.sequence();
        let lower = seq[pos as usize];
        let upper = seq[pos as usize + 1];
        let mut rank = order.rank.clone();
        rank.swap(lower as usize, upper as usize);
        OrderEdge {
            base: order.clone(),
            swapped: LinearOrder { rank },
            lower,
            upper,
        }
    }

    /// Edge at `order` swapping elements `a` and `b`, which must be
    /// consecutive there.
    pub fn from_swap(order: &LinearOrder, a: u8, b: u8) -> Result<Self> {
        if !order.consecutive(a, b)? {
            return Err(Error::BadParameters(alloc::format!(
                "elements {a} and {b} are not consecutive in the order"
            )));
        }
        let pos = order.position(a).min(order.position(b));
        Ok(Self::at_position(order, pos))
    }

    pub fn order(&self, side: Side) -> &LinearOrder {
        match side {
            Side::Base => &self.base,
            Side::Swapped => &self.swapped,
        }
    }

    pub fn base(&self) -> &LinearOrder {
        &self.base
    }

    pub fn swapped(&self) -> &LinearOrder {
        &self.swapped
    }

    /// The element smaller in the base order.
    pub fn lower(&self) -> u8 {
        self.lower
    }

    /// The element smaller in the swapped order.
    pub fn upper(&self) -> u8 {
        self.upper
    }

    pub fn swap(&self) -> Transposition {
        Transposition {
            a: self.lower,
            b: self.upper,
        }
    }
}

/// The edges incident to `order`: one per consecutive pair.
pub fn edges_at(order: &LinearOrder) -> Vec<OrderEdge> {
    (0..order.len().saturating_sub(1))
        .map(|p| OrderEdge::at_position(order, p as u8))
        .collect()
}

/// A path of consecutive-pair swaps from `from` to `to`, of length equal to
/// the number of inversions between the two orders (insertion sort).
pub fn path_between(from: &LinearOrder, to: &LinearOrder) -> Result<Vec<OrderEdge>> {
    if from.len() != to.len() {
        return Err(Error::GroundMismatch);
    }
    let mut path = Vec::new();
    let mut current = from.clone();
    let mut seq = current.sequence();
    for (pos, &want) in to.sequence().iter().enumerate() {
        let mut at = seq.iter().position(|&e| e == want).unwrap();
        while at > pos {
            let edge = OrderEdge::at_position(&current, at as u8 - 1);
            current = edge.swapped().clone();
            seq.swap(at - 1, at);
            path.push(edge);
            at -= 1;
        }
    }
    debug_assert_eq!(&current, to);
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences_and_ranks_agree() {
        let w = LinearOrder::from_sequence(&[2, 0, 1]).unwrap();
        assert_eq!(w.position(2), 0);
        assert!(w.less(2, 0));
        assert_eq!(w.sequence(), [2, 0, 1]);
        assert!(LinearOrder::from_sequence(&[0, 0]).is_err());
        assert!(LinearOrder::from_ranks(alloc::vec![0, 2]).is_err());
    }

    #[test]
    fn min_in_respects_the_order() {
        let w = LinearOrder::from_sequence(&[1, 0, 2]).unwrap();
        assert_eq!(w.min_in(ElemSubset(0b101)), Some(0));
        assert_eq!(w.min_in(ElemSubset(0b110)), Some(1));
        assert_eq!(w.min_in(ElemSubset::EMPTY), None);
    }

    #[test]
    fn consecutive_checks() {
        let w = LinearOrder::natural(3);
        assert!(w.consecutive(0, 1).unwrap());
        assert!(!w.consecutive(0, 2).unwrap());
        assert!(w.consecutive(1, 0).unwrap());
        assert_eq!(w.consecutive(1, 1), Err(Error::SameElement));
    }

    #[test]
    fn identity_acts_trivially() {
        let w = LinearOrder::from_sequence(&[2, 1, 0]).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(id.apply_to_order(&w).unwrap(), w);
    }

    #[test]
    fn transposition_action_matches_definition() {
        // order 0<1<2 moved by the swap of 0,1 gives 1<0<2
        let w = LinearOrder::natural(3);
        let t = Permutation::transposition(3, 0, 1).unwrap();
        let moved = t.apply_to_order(&w).unwrap();
        assert_eq!(moved.sequence(), [1, 0, 2]);
    }

    #[test]
    fn edges_at_counts() {
        assert_eq!(edges_at(&LinearOrder::natural(1)).len(), 0);
        assert_eq!(edges_at(&LinearOrder::natural(2)).len(), 1);
        let edges = edges_at(&LinearOrder::natural(3));
        assert_eq!(edges.len(), 2);
        assert_eq!((edges[0].lower(), edges[0].upper()), (0, 1));
        assert_eq!((edges[1].lower(), edges[1].upper()), (1, 2));
        assert_eq!(edges[0].swapped().sequence(), [1, 0, 2]);
    }

    #[test]
    fn edge_orders_differ_only_on_the_pair() {
        let w = LinearOrder::from_sequence(&[3, 1, 0, 2]).unwrap();
        for edge in edges_at(&w) {
            let (a, z) = (edge.lower(), edge.upper());
            assert!(edge.base().less(a, z));
            assert!(edge.swapped().less(z, a));
            for x in 0..4u8 {
                for y in 0..4u8 {
                    if x == y {
                        continue;
                    }
                    let pair = (x.min(y), x.max(y));
                    if pair == (a.min(z), a.max(z)) {
                        continue;
                    }
                    assert_eq!(edge.base().less(x, y), edge.swapped().less(x, y));
                }
            }
        }
    }

    #[test]
    fn paths_have_inversion_length() {
        let a = LinearOrder::natural(3);
        assert!(path_between(&a, &a).unwrap().is_empty());
        let rev = LinearOrder::from_sequence(&[2, 1, 0]).unwrap();
        let path = path_between(&a, &rev).unwrap();
        assert_eq!(path.len(), 3);
        // each step is a valid edge chained to the next
        assert_eq!(path[0].base(), &a);
        for w in path.windows(2) {
            assert_eq!(w[0].swapped(), w[1].base());
        }
        assert_eq!(path.last().unwrap().swapped(), &rev);

        let b = LinearOrder::natural(2);
        let rb = LinearOrder::from_sequence(&[1, 0]).unwrap();
        assert_eq!(path_between(&b, &rb).unwrap().len(), 1);
        assert!(path_between(&a, &b).is_err());
    }
}
