//! Small-set value types: vertex bit-sets and edge sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A set of vertices stored as a 32-bit mask. Vertex `v` is bit `1 << v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= 32);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut mask = 0u32;
        for v in vs {
            debug_assert!(v < 32);
            mask |= 1 << v;
        }
        VertexSet(mask)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 32);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u32 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Enumerates all `k`-subsets of `0..n` as vertex sets, ascending by mask value.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    assert!(n <= 32);
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    // Gosper's hack walks k-bit masks in increasing numeric order.
    let limit: u64 = 1u64 << n;
    let mut mask: u64 = (1u64 << k) - 1;
    while mask < limit {
        out.push(VertexSet(mask as u32));
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// An unordered edge set; pairs are stored normalized with `u < v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet {
    edges: BTreeSet<(usize, usize)>,
}

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet::default()
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> EdgeSet {
        let mut set = EdgeSet::new();
        for (u, v) in edges {
            set.insert(u, v);
        }
        set
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        assert!(u != v, "edge endpoints must differ");
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Ascending lexicographic iterator over normalized pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.edges.is_disjoint(&other.edges)
    }

    /// Every vertex incident to an edge of the set.
    pub fn vertices(&self) -> VertexSet {
        let mut vs = VertexSet::EMPTY;
        for &(u, v) in &self.edges {
            vs.insert(u);
            vs.insert(v);
        }
        vs
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> EdgeSet {
        EdgeSet::from_edges(iter)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_iter([0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 2, 5]);
        assert_eq!(VertexSet::full(3), VertexSet(0b111));
    }

    #[test]
    fn k_subsets_counts_and_order() {
        let subs = k_subsets(5, 3);
        assert_eq!(subs.len(), 10);
        // ascending mask order makes sweeps reproducible
        for w in subs.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        assert_eq!(subs[0], VertexSet::from_iter([0, 1, 2]));
        assert_eq!(k_subsets(4, 0).len(), 1);
        assert_eq!(k_subsets(3, 5).len(), 0);
    }

    #[test]
    fn edge_set_normalizes() {
        let mut e = EdgeSet::new();
        e.insert(3, 1);
        assert!(e.contains(1, 3));
        assert!(e.contains(3, 1));
        assert_eq!(e.iter().next(), Some((1, 3)));
        assert_eq!(e.vertices().to_vec(), vec![1, 3]);
    }
}
