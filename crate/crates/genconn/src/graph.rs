//! Simple undirected graphs on up to 32 vertices, with bit-row adjacency.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::sets::{EdgeSet, VertexSet};

/// Largest supported vertex count; one adjacency row fits a machine word.
pub const MAX_N: usize = 32;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; `adj[v]` is the neighbor mask of
/// `v`, rows at index `>= n` stay zero, and the cached edge count `m` equals
/// half the total population count of the rows.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: [u32; MAX_N],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_N {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, m: 0, adj: [0; MAX_N] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.m += 1;
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n && self.has_edge(u, v) {
            self.adj[u] &= !(1u32 << v);
            self.adj[v] &= !(1u32 << u);
            self.m -= 1;
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 != 0
    }

    /// Neighbor mask of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as normalized pairs in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((1u32 << u) | ((1u32 << u) - 1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Non-edges (missing pairs) in ascending lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph { n: self.n, m: 0, adj: [0; MAX_N] };
        let full = VertexSet::full(self.n).0;
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1u32 << v);
        }
        g.m = self.n * (self.n - 1) / 2 - self.m;
        g
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(0, self.vertex_set()) == self.vertex_set()
    }

    /// Connected components, each a vertex set, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = self.vertex_set();
        while let Some(v) = remaining.min() {
            let comp = self.reachable_within(v, remaining);
            out.push(comp);
            remaining = remaining.difference(comp);
        }
        out
    }

    /// The subgraph induced by `vs`, relabeled to `0..vs.len()` in ascending
    /// vertex order.
    pub fn induced_subgraph(&self, vs: VertexSet) -> Graph {
        let verts = vs.to_vec();
        let mut g = Graph { n: verts.len().max(1), m: 0, adj: [0; MAX_N] };
        g.n = verts.len();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                    g.m += 1;
                }
            }
        }
        g
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, m: self.m, adj: [0; MAX_N] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Disjoint union; the second operand's vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut g = Graph { n, m: self.m + other.m, adj: [0; MAX_N] };
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Joins two connected graphs by one new edge from `u` in `self` to `v`
    /// in `other` (vertices of `other` are shifted by `self.n()`). The new
    /// edge is a bridge of the result.
    pub fn add_operation(&self, other: &Graph, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let mut g = self.disjoint_union(other)?;
        g.add_edge(u, self.n + v)?;
        Ok(g)
    }

    /// Upper-triangle adjacency bits in row-major order, packed MSB-first so
    /// that array comparison is lexicographic comparison of the bit string.
    pub fn upper_triangle_bits(&self) -> [u64; 8] {
        let mut words = [0u64; 8];
        let mut pos = 0usize;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    words[pos / 64] |= 1u64 << (63 - pos % 64);
                }
                pos += 1;
            }
        }
        words
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Graph) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Graph {
    /// Orders by vertex count, then by the row-major upper-triangle bit
    /// string; used for deterministic enumeration and report output.
    fn cmp(&self, other: &Graph) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.upper_triangle_bits().cmp(&other.upper_triangle_bits()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edge_set())
    }
}
