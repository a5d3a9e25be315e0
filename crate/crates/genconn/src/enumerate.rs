//! Isomorph-free enumeration of graphs on a fixed vertex count by edge
//! augmentation with canonical-deletion rejection.
//!
//! Level m+1 is generated from level m: each canonical parent gets every
//! possible extra edge, the child is canonicalized, and it survives only if
//! deleting the lexicographically last edge of its canonical form leads back
//! to that parent. Each isomorphism class therefore appears exactly once,
//! under exactly one parent, with no global seen-set.

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count for full enumeration sweeps.
pub const ENUM_BUDGET: usize = 8;

/// Streams every graph on `n` vertices with edge count in
/// `min_edges..=max_edges`, exactly once up to isomorphism, in canonical
/// form, ordered by edge count and then adjacency bit string.
pub fn enumerate_graphs(
    n: usize,
    min_edges: usize,
    max_edges: usize,
) -> Result<GraphEnumeration> {
    enumerate_graphs_with_budget(n, min_edges, max_edges, ENUM_BUDGET)
}

pub fn enumerate_graphs_with_budget(
    n: usize,
    min_edges: usize,
    max_edges: usize,
    budget: usize,
) -> Result<GraphEnumeration> {
    if n == 0 || n > 32 {
        return Err(Error::OrderOutOfRange(n));
    }
    if n > budget {
        return Err(Error::BudgetExceeded { op: "enumerate_graphs", n, max: budget });
    }
    let cap = n * (n - 1) / 2;
    let max_edges = max_edges.min(cap);
    let level: Vec<Graph> = vec![Graph::empty(n)?];
    Ok(GraphEnumeration {
        min_edges,
        max_edges,
        level_m: 0,
        level,
        yielding: Vec::new(),
        next_yield: 0,
        primed: false,
    })
}

/// Connected graphs only; same order and budget as [`enumerate_graphs`].
pub fn enumerate_connected(
    n: usize,
    min_edges: usize,
    max_edges: usize,
) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_graphs(n, min_edges, max_edges)?.filter(Graph::is_connected))
}

pub fn enumerate_connected_with_budget(
    n: usize,
    min_edges: usize,
    max_edges: usize,
    budget: usize,
) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_graphs_with_budget(n, min_edges, max_edges, budget)?
        .filter(Graph::is_connected))
}

pub struct GraphEnumeration {
    min_edges: usize,
    max_edges: usize,
    level_m: usize,
    level: Vec<Graph>,
    yielding: Vec<Graph>,
    next_yield: usize,
    primed: bool,
}

impl GraphEnumeration {
    fn prime_level(&mut self) {
        self.yielding.clear();
        self.next_yield = 0;
        if self.level_m >= self.min_edges {
            self.yielding = self.level.clone();
        }
    }

    fn advance_level(&mut self) -> bool {
        if self.level_m >= self.max_edges || self.level.is_empty() {
            return false;
        }
        let mut next: Vec<Graph> = self
            .level
            .par_iter()
            .flat_map_iter(children)
            .collect();
        next.sort_unstable();
        self.level = next;
        self.level_m += 1;
        true
    }
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.primed {
            self.primed = true;
            self.prime_level();
        }
        loop {
            if self.next_yield < self.yielding.len() {
                let g = self.yielding[self.next_yield];
                self.next_yield += 1;
                return Some(g);
            }
            if !self.advance_level() {
                return None;
            }
            self.prime_level();
        }
    }
}

/// Accepted canonical children of one canonical parent (one extra edge each).
fn children(parent: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for (u, v) in parent.non_edges() {
        let mut child = *parent;
        child.add_edge(u, v).expect("non-edge within range");
        let c = canonical_form(&child);
        if out.contains(&c) {
            continue; // same class reached through an equivalent edge
        }
        if canonical_deletion_parent(&c) == *parent {
            out.push(c);
        }
    }
    out
}

/// The canonical form of the child minus the lexicographically last edge of
/// its canonical labeling; the unique parent a class is accepted from.
fn canonical_deletion_parent(c: &Graph) -> Graph {
    let (u, v) = c.edges().last().expect("child has at least one edge");
    let mut parent = *c;
    parent.remove_edge(u, v);
    canonical_form(&parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn labeled_classes(n: usize) -> BTreeSet<Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 != 0)
                .map(|(_, &e)| e)
                .collect();
            out.insert(canonical_form(&Graph::from_edges(n, &edges).unwrap()));
        }
        out
    }

    #[test]
    fn counts_match_bruteforce_up_to_5() {
        for n in 1..=5usize {
            let expect = labeled_classes(n);
            let got: Vec<Graph> = enumerate_graphs(n, 0, n * (n - 1) / 2).unwrap().collect();
            let set: BTreeSet<Graph> = got.iter().copied().collect();
            assert_eq!(set.len(), got.len(), "duplicates at n={n}");
            assert_eq!(set, expect, "classes at n={n}");
        }
    }

    #[test]
    fn connected_counts() {
        // 1, 1, 2, 6, 21 connected graphs on 1..=5 vertices
        let expect = [1usize, 1, 2, 6, 21];
        for (i, &want) in expect.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_connected(n, 0, n * (n - 1) / 2).unwrap().count();
            assert_eq!(got, want, "n={n}");
        }
        // 2 connected graphs on 3 vertices: the path and the triangle
        let got: Vec<Graph> = enumerate_connected(3, 0, 3).unwrap().collect();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn edge_range_is_respected() {
        let got: Vec<Graph> = enumerate_graphs(5, 3, 4).unwrap().collect();
        assert!(got.iter().all(|g| (3..=4).contains(&g.m())));
        // 4 classes with 3 edges, 6 with 4 edges on 5 vertices
        assert_eq!(got.iter().filter(|g| g.m() == 3).count(), 4);
        assert_eq!(got.iter().filter(|g| g.m() == 4).count(), 6);
    }

    #[test]
    fn stream_is_sorted_and_canonical() {
        let got: Vec<Graph> = enumerate_graphs(5, 0, 10).unwrap().collect();
        for g in &got {
            assert_eq!(canonical_form(g), *g);
        }
        for w in got.windows(2) {
            assert!((w[0].m(), w[0]) < (w[1].m(), w[1]));
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_graphs(9, 0, 36),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(enumerate_graphs_with_budget(9, 0, 2, 9).is_ok());
    }
}
