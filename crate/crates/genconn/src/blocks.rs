//! Bridges and the decomposition of a connected graph into its maximal
//! bridgeless pieces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{EdgeSet, VertexSet};

/// Cut edges of `g`, found by a lowlink depth-first search.
pub fn bridges(g: &Graph) -> EdgeSet {
    let n = g.n();
    let mut ord = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut out = EdgeSet::new();
    let mut counter = 0usize;
    for start in 0..n {
        if ord[start] == usize::MAX {
            dfs(g, start, usize::MAX, &mut counter, &mut ord, &mut low, &mut out);
        }
    }
    out
}

fn dfs(
    g: &Graph,
    v: usize,
    parent: usize,
    counter: &mut usize,
    ord: &mut [usize],
    low: &mut [usize],
    out: &mut EdgeSet,
) {
    ord[v] = *counter;
    low[v] = *counter;
    *counter += 1;
    for u in g.neighbors(v).iter() {
        if u == parent {
            continue;
        }
        if ord[u] == usize::MAX {
            dfs(g, u, v, counter, ord, low, out);
            low[v] = low[v].min(low[u]);
            if low[u] > ord[v] {
                out.insert(v, u);
            }
        } else {
            low[v] = low[v].min(ord[u]);
        }
    }
}

/// Shape of one maximal bridgeless piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentClass {
    Singleton,
    Cycle,
    CycleWithOneEar,
    Other,
}

/// Bridges of a connected graph together with the connected components left
/// after deleting them, each classified by shape.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub bridges: EdgeSet,
    pub components: Vec<(VertexSet, ComponentClass)>,
}

impl BlockDecomposition {
    pub fn class_of(&self, v: usize) -> ComponentClass {
        self.components
            .iter()
            .find(|(vs, _)| vs.contains(v))
            .map(|&(_, c)| c)
            .expect("components cover every vertex")
    }
}

/// Deletes all bridges of `g` and classifies what remains.
///
/// A component of the bridge-deleted graph is bridgeless, hence (when it has
/// more than one vertex) 2-edge-connected. With v vertices it is a single
/// cycle exactly when it has v edges, and a cycle with one ear (a theta
/// subdivision or two cycles sharing a vertex) exactly when it has v+1 edges.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bridge_set = bridges(g);
    let mut stripped = *g;
    for (u, v) in bridge_set.iter() {
        stripped.remove_edge(u, v);
    }
    let mut components = Vec::new();
    for comp in stripped.connected_components() {
        let vc = comp.len();
        let ec = comp
            .iter()
            .map(|v| stripped.neighbors(v).intersection(comp).len())
            .sum::<usize>()
            / 2;
        let class = if vc == 1 {
            ComponentClass::Singleton
        } else if ec == vc {
            ComponentClass::Cycle
        } else if ec == vc + 1 {
            ComponentClass::CycleWithOneEar
        } else {
            ComponentClass::Other
        };
        // a bridgeless component on >= 2 vertices is 2-edge-connected and so
        // cannot have fewer edges than vertices
        assert!(vc == 1 || ec >= vc, "bridgeless component with a tree edge count");
        components.push((comp, class));
    }
    Ok(BlockDecomposition { bridges: bridge_set, components })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_edges_are_all_bridges() {
        for n in 2..=8 {
            let p = Graph::path(n).unwrap();
            assert_eq!(bridges(&p).len(), n - 1);
        }
        let star = Graph::from_edges(5, &[(4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert_eq!(bridges(&star).len(), 4);
    }

    #[test]
    fn cycles_have_none() {
        assert!(bridges(&Graph::cycle(5).unwrap()).is_empty());
        assert!(bridges(&Graph::complete(4).unwrap()).is_empty());
    }

    #[test]
    fn joining_edge_is_the_only_bridge() {
        let c3 = Graph::cycle(3).unwrap();
        let g = c3.add_operation(&c3, 0, 0).unwrap();
        let b = bridges(&g);
        assert_eq!(b.len(), 1);
        assert!(b.contains(0, 3));
    }

    #[test]
    fn bridge_deletion_characterization() {
        // every bridge disconnects; every non-bridge does not
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)],
        )
        .unwrap();
        let b = bridges(&g);
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let mut h = g;
            h.remove_edge(u, v);
            assert_eq!(h.is_connected(), !b.contains(u, v), "edge ({u},{v})");
        }
    }

    #[test]
    fn decomposition_shapes() {
        // C6 with one chord: a single cycle-with-one-ear component
        let mut theta = Graph::cycle(6).unwrap();
        theta.add_edge(0, 3).unwrap();
        let d = block_decomposition(&theta).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].1, ComponentClass::CycleWithOneEar);
        assert!(d.bridges.is_empty());

        // two triangles joined by an edge: two cycle components, one bridge
        let c3 = Graph::cycle(3).unwrap();
        let two = c3.add_operation(&c3, 0, 0).unwrap();
        let d = block_decomposition(&two).unwrap();
        assert_eq!(d.bridges.len(), 1);
        assert_eq!(d.components.len(), 2);
        assert!(d.components.iter().all(|&(_, c)| c == ComponentClass::Cycle));

        // star K_{1,4}: five singletons, four bridges
        let star = Graph::from_edges(5, &[(4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        let d = block_decomposition(&star).unwrap();
        assert_eq!(d.bridges.len(), 4);
        assert_eq!(d.components.len(), 5);
        assert!(d.components.iter().all(|&(_, c)| c == ComponentClass::Singleton));

        // K4 is denser than a cycle with one ear
        let d = block_decomposition(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(d.components[0].1, ComponentClass::Other);

        assert_eq!(
            block_decomposition(&Graph::empty(2).unwrap()).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn component_counts_add_up() {
        let c4 = Graph::cycle(4).unwrap();
        let c3 = Graph::cycle(3).unwrap();
        let g = c4.add_operation(&c3, 1, 2).unwrap();
        let d = block_decomposition(&g).unwrap();
        let total: usize = d.components.iter().map(|(vs, _)| vs.len()).sum();
        assert_eq!(total, g.n());
        assert_eq!(d.bridges.len(), d.components.len() - 1);
    }
}
