//! Edge-disjoint spanning trees: the partition criterion, a constructive
//! backtracking packer, and the sweep that checks near-complete graphs keep
//! two trees after small edge deletions.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::graph_to_graph6;
use crate::sets::{EdgeSet, VertexSet};

/// Largest vertex count for the partition sweep (Bell(10) ≈ 1.16e5).
pub const PARTITION_BUDGET: usize = 10;
/// Largest vertex count for the constructive packer.
pub const PACKER_BUDGET: usize = 12;

/// A partition of the vertex set into nonempty disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Partition> {
        let mut union = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !union.intersection(*b).is_empty() {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            union = union.union(*b);
        }
        if union != VertexSet::full(n) {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {union:?}, not all of 0..{n}"
            )));
        }
        Ok(Partition { blocks })
    }

    /// Number of blocks.
    pub fn p(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks grouped from a restricted-growth string.
    fn from_rgs(rgs: &[usize]) -> Partition {
        let p = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![VertexSet::EMPTY; p];
        for (v, &b) in rgs.iter().enumerate() {
            blocks[b].insert(v);
        }
        Partition { blocks }
    }
}

/// Number of edges whose endpoints lie in different blocks.
pub fn cross_edges(g: &Graph, part: &Partition) -> usize {
    let mut label = [usize::MAX; 32];
    for (b, vs) in part.blocks.iter().enumerate() {
        for v in vs.iter() {
            label[v] = b;
        }
    }
    g.edges().filter(|&(u, v)| label[u] != label[v]).count()
}

/// Outcome of the partition criterion.
#[derive(Debug, Clone)]
pub enum PartitionCheck {
    /// Every partition with p blocks has at least t(p-1) cross-edges.
    Satisfied,
    /// A violating partition: fewest blocks first, then lexicographically
    /// smallest restricted-growth string.
    Violated(Partition),
}

impl PartitionCheck {
    pub fn holds(&self) -> bool {
        matches!(self, PartitionCheck::Satisfied)
    }
}

fn next_rgs(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let mx = *a[..i].iter().max().unwrap();
        if a[i] <= mx {
            a[i] += 1;
            for j in i + 1..a.len() {
                a[j] = 0;
            }
            return true;
        }
    }
    false
}

/// Checks "t edge-disjoint spanning trees exist" by the partition criterion:
/// every partition into p blocks must be crossed by at least t(p-1) edges.
pub fn nash_williams_check(g: &Graph, t: usize) -> Result<PartitionCheck> {
    nash_williams_check_with_budget(g, t, PARTITION_BUDGET)
}

pub fn nash_williams_check_with_budget(
    g: &Graph,
    t: usize,
    budget: usize,
) -> Result<PartitionCheck> {
    let n = g.n();
    if n > budget {
        return Err(Error::BudgetExceeded { op: "nash_williams_check", n, max: budget });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rgs = vec![0usize; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        let p = rgs.iter().max().unwrap() + 1;
        if p > 1 {
            let part = Partition::from_rgs(&rgs);
            if cross_edges(g, &part) < t * (p - 1) {
                let better = match &best {
                    None => true,
                    Some((bp, brgs)) => p < *bp || (p == *bp && rgs < *brgs),
                };
                if better {
                    best = Some((p, rgs.clone()));
                }
            }
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok(match best {
        None => PartitionCheck::Satisfied,
        Some((_, rgs)) => PartitionCheck::Violated(Partition::from_rgs(&rgs)),
    })
}

#[derive(Clone, Copy)]
struct Dsu {
    parent: [u8; 32],
    joins: u8,
}

impl Dsu {
    fn new() -> Dsu {
        let mut parent = [0u8; 32];
        for (v, slot) in parent.iter_mut().enumerate() {
            *slot = v as u8;
        }
        Dsu { parent, joins: 0 }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut v = v;
        while self.parent[v] as usize != v {
            self.parent[v] = self.parent[self.parent[v] as usize];
            v = self.parent[v] as usize;
        }
        v
    }

    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            false
        } else {
            self.parent[ru] = rv as u8;
            self.joins += 1;
            true
        }
    }
}

/// `t` pairwise edge-disjoint spanning trees of `g`, or `None`.
///
/// Backtracks over the edges in lexicographic order, assigning each to one of
/// the forests or to none, with capacity and reachability pruning.
pub fn find_edge_disjoint_spanning_trees(g: &Graph, t: usize) -> Result<Option<Vec<EdgeSet>>> {
    find_edge_disjoint_spanning_trees_with_budget(g, t, PACKER_BUDGET)
}

pub fn find_edge_disjoint_spanning_trees_with_budget(
    g: &Graph,
    t: usize,
    budget: usize,
) -> Result<Option<Vec<EdgeSet>>> {
    let n = g.n();
    if n > budget {
        return Err(Error::BudgetExceeded {
            op: "find_edge_disjoint_spanning_trees",
            n,
            max: budget,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if t == 0 {
        return Ok(Some(Vec::new()));
    }
    // t spanning trees need t(n-1) distinct edges
    if g.m() < t * (n - 1) {
        return Ok(None);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut forests = vec![Dsu::new(); t];
    let mut assignment = vec![usize::MAX; edges.len()];
    if assign(g, &edges, 0, &mut forests, &mut assignment) {
        let mut out = vec![EdgeSet::new(); t];
        for (i, &tree) in assignment.iter().enumerate() {
            if tree != usize::MAX {
                out[tree].insert(edges[i].0, edges[i].1);
            }
        }
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

fn assign(
    g: &Graph,
    edges: &[(usize, usize)],
    idx: usize,
    forests: &mut Vec<Dsu>,
    assignment: &mut Vec<usize>,
) -> bool {
    let n = g.n();
    let t = forests.len();
    let done: usize = forests.iter().map(|f| f.joins as usize).sum();
    if done == t * (n - 1) {
        return true;
    }
    if idx == edges.len() || t * (n - 1) - done > edges.len() - idx {
        return false;
    }
    // each unfinished forest must still be able to reach every vertex using
    // the edges not yet decided
    for f in forests.iter() {
        if (f.joins as usize) < n - 1 {
            let mut probe = *f;
            for &(u, v) in &edges[idx..] {
                probe.union(u, v);
            }
            if (probe.joins as usize) < n - 1 {
                return false;
            }
        }
    }
    let (u, v) = edges[idx];
    for tree in 0..t {
        if tree > 0 && forests[tree].joins == 0 && forests[tree - 1].joins == 0 {
            break; // empty forests are interchangeable
        }
        let saved = forests[tree];
        if forests[tree].union(u, v) {
            assignment[idx] = tree;
            if assign(g, edges, idx + 1, forests, assignment) {
                return true;
            }
            assignment[idx] = usize::MAX;
            forests[tree] = saved;
        }
    }
    assign(g, edges, idx + 1, forests, assignment)
}

/// Independently verifies a spanning-tree packing witness.
pub fn verify_spanning_trees(g: &Graph, trees: &[EdgeSet]) -> Result<()> {
    for (i, tree) in trees.iter().enumerate() {
        if tree.len() != g.n() - 1 {
            return Err(Error::InvalidWitness(format!("tree {i} has wrong edge count")));
        }
        if tree.iter().any(|(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidWitness(format!("tree {i} is not a subgraph")));
        }
        let mut dsu = Dsu::new();
        for (u, v) in tree.iter() {
            if !dsu.union(u, v) {
                return Err(Error::InvalidWitness(format!("tree {i} contains a cycle")));
            }
        }
        if tree.vertices() != g.vertex_set() {
            return Err(Error::InvalidWitness(format!("tree {i} does not span")));
        }
    }
    for i in 0..trees.len() {
        for j in i + 1..trees.len() {
            if !trees[i].is_disjoint(&trees[j]) {
                return Err(Error::InvalidWitness(format!("trees {i} and {j} share an edge")));
            }
        }
    }
    Ok(())
}

/// True iff `g` has no two edge-disjoint spanning trees; for terminal sets
/// equal to the whole vertex set, internally disjoint trees are exactly
/// edge-disjoint spanning trees, so this decides kappa-bar_n(g) = 1.
pub fn kappa_n_equals_one(g: &Graph) -> Result<bool> {
    Ok(find_edge_disjoint_spanning_trees(g, 2)?.is_none())
}

/// Result of the deletion sweep over near-complete graphs.
#[derive(Debug, Clone, Serialize)]
pub struct DeletionSweepReport {
    pub n: usize,
    /// deletion sets examined (graphs with at most n-3 edges, up to iso)
    pub cases: usize,
    /// graph6 of K_n minus M for every M that unexpectedly lost two trees
    pub failures: Vec<String>,
    /// deleting the n-2 edges at one vertex must destroy the packing
    pub tightness_holds: bool,
}

impl DeletionSweepReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.tightness_holds
    }
}

/// For every edge set M of K_n with |M| <= n-3 (up to isomorphism of M),
/// confirms K_n - M still packs two edge-disjoint spanning trees; also
/// confirms the bound is tight by deleting a star of n-2 edges.
pub fn check_clique_edge_deletions(n: usize) -> Result<DeletionSweepReport> {
    if !(5..=8).contains(&n) {
        return Err(Error::BudgetExceeded { op: "check_clique_edge_deletions", n, max: 8 });
    }
    let deletions: Vec<Graph> = enumerate_graphs(n, 0, n - 3)?.collect();
    let cases = deletions.len();
    let failures: Vec<String> = deletions
        .par_iter()
        .filter_map(|m| {
            let mut g = Graph::complete(n).expect("valid order");
            for (u, v) in m.edges() {
                g.remove_edge(u, v);
            }
            match find_edge_disjoint_spanning_trees(&g, 2) {
                Ok(Some(trees)) => {
                    verify_spanning_trees(&g, &trees).expect("packer witness must verify");
                    None
                }
                Ok(None) => Some(graph_to_graph6(&g)),
                Err(e) => panic!("packer failed on K_{n} minus a set: {e}"),
            }
        })
        .collect();

    // tightness: strip one vertex down to degree 1
    let mut tight = Graph::complete(n)?;
    for v in 1..n - 1 {
        tight.remove_edge(0, v);
    }
    let tightness_holds = find_edge_disjoint_spanning_trees(&tight, 2)?.is_none();

    Ok(DeletionSweepReport { n, cases, failures, tightness_holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vset(vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(vs.iter().copied())
    }

    #[test]
    fn cross_edge_counts() {
        let k4 = Graph::complete(4).unwrap();
        let singles = Partition::new(
            4,
            (0..4).map(VertexSet::singleton).collect(),
        )
        .unwrap();
        assert_eq!(cross_edges(&k4, &singles), 6);
        let halves =
            Partition::new(4, vec![vset(&[0, 1]), vset(&[2, 3])]).unwrap();
        assert_eq!(cross_edges(&k4, &halves), 4);
        let whole = Partition::new(4, vec![vset(&[0, 1, 2, 3])]).unwrap();
        assert_eq!(cross_edges(&k4, &whole), 0);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vset(&[0, 1])]).is_err());
        assert!(Partition::new(3, vec![vset(&[0, 1]), vset(&[1, 2])]).is_err());
        assert!(Partition::new(3, vec![vset(&[0, 1]), vset(&[2])]).is_ok());
    }

    #[test]
    fn criterion_on_k5_and_trees() {
        let k5 = Graph::complete(5).unwrap();
        assert!(nash_williams_check(&k5, 2).unwrap().holds());

        // a tree fails, and the minimal violating partition has two blocks
        let p5 = Graph::path(5).unwrap();
        match nash_williams_check(&p5, 2).unwrap() {
            PartitionCheck::Violated(part) => {
                assert_eq!(part.p(), 2);
                assert!(cross_edges(&p5, &part) < 2);
            }
            PartitionCheck::Satisfied => panic!("trees cannot hold two spanning trees"),
        }

        // deleting any two edges from K5 keeps the criterion
        let mut g = k5;
        g.remove_edge(0, 1);
        g.remove_edge(2, 3);
        assert!(nash_williams_check(&g, 2).unwrap().holds());
    }

    #[test]
    fn packer_finds_and_verifies() {
        let k4 = Graph::complete(4).unwrap();
        let trees = find_edge_disjoint_spanning_trees(&k4, 2).unwrap().expect("two trees");
        verify_spanning_trees(&k4, &trees).unwrap();

        for n in 3..=7 {
            assert!(find_edge_disjoint_spanning_trees(&Graph::cycle(n).unwrap(), 2)
                .unwrap()
                .is_none());
        }

        let mut g = Graph::complete(5).unwrap();
        g.remove_edge(0, 1);
        g.remove_edge(0, 2);
        let trees = find_edge_disjoint_spanning_trees(&g, 2).unwrap().expect("two trees");
        verify_spanning_trees(&g, &trees).unwrap();
    }

    #[test]
    fn packer_agrees_with_criterion_up_to_6() {
        for n in 2..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut seen = std::collections::BTreeSet::new();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                if !g.is_connected() || !seen.insert(crate::canon::canonical_form(&g)) {
                    continue;
                }
                let constructive = find_edge_disjoint_spanning_trees(&g, 2).unwrap();
                let criterion = nash_williams_check(&g, 2).unwrap();
                assert_eq!(constructive.is_some(), criterion.holds(), "{g:?}");
                if let Some(trees) = constructive {
                    verify_spanning_trees(&g, &trees).unwrap();
                }
            }
        }
    }

    #[test]
    fn kappa_n_examples() {
        // 5 edges cannot hold two 3-edge spanning trees
        let b = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(kappa_n_equals_one(&b).unwrap());

        assert!(!kappa_n_equals_one(&Graph::complete(5).unwrap()).unwrap());

        // K5 plus a pendant vertex: the pendant edge blocks a second tree
        let k5 = Graph::complete(5).unwrap();
        let g = k5.add_operation(&Graph::empty(1).unwrap(), 0, 0).unwrap();
        assert!(kappa_n_equals_one(&g).unwrap());
    }

    #[test]
    fn deletion_sweep_smallest_case() {
        let report = check_clique_edge_deletions(5).unwrap();
        // deletion sets on 5 vertices with <= 2 edges: empty, one edge,
        // a 2-path, a 2-matching
        assert_eq!(report.cases, 4);
        assert!(report.failures.is_empty());
        assert!(report.tightness_holds);
        assert!(report.pass());
        assert!(check_clique_edge_deletions(4).is_err());
    }
}
