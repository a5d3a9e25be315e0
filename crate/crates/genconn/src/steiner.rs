//! Exact generalized local connectivity by backtracking over packings of
//! internally disjoint Steiner trees.
//!
//! For a terminal set S, kappa(S) is the maximum number of subtrees that all
//! contain S, share no edges, and pairwise share no vertices outside S. The
//! search enumerates the *minimal* S-trees (trees whose every leaf is a
//! terminal) and packs compatible selections; any packing shrinks to one made
//! of minimal trees without losing disjointness, so the answer is exact.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{k_subsets, EdgeSet, VertexSet};

/// Largest vertex count the Steiner search accepts by default.
pub const STEINER_BUDGET: usize = 10;

/// A witness: pairwise internally disjoint S-trees.
#[derive(Debug, Clone, Serialize)]
pub struct SteinerPacking {
    pub terminals: VertexSet,
    pub trees: Vec<EdgeSet>,
}

impl SteinerPacking {
    /// Checks every invariant directly against `g`, independently of how the
    /// packing was produced.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.terminals.len() < 2 {
            return Err(Error::InvalidWitness("fewer than two terminals".into()));
        }
        for (i, tree) in self.trees.iter().enumerate() {
            if !is_steiner_tree(g, tree, self.terminals) {
                return Err(Error::InvalidWitness(format!("entry {i} is not a Steiner tree")));
            }
        }
        for i in 0..self.trees.len() {
            for j in i + 1..self.trees.len() {
                if !self.trees[i].is_disjoint(&self.trees[j]) {
                    return Err(Error::InvalidWitness(format!("trees {i} and {j} share an edge")));
                }
                let shared = self.trees[i].vertices().intersection(self.trees[j].vertices());
                if shared != self.terminals {
                    return Err(Error::InvalidWitness(format!(
                        "trees {i} and {j} meet in {shared:?}, not exactly the terminals"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// True iff `tree` is a subgraph of `g` that forms a tree whose vertex set
/// contains `s`.
pub fn is_steiner_tree(g: &Graph, tree: &EdgeSet, s: VertexSet) -> bool {
    if tree.iter().any(|(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let verts = tree.vertices();
    if !s.is_subset_of(verts) || verts.is_empty() {
        return false;
    }
    if tree.len() + 1 != verts.len() {
        return false; // wrong edge count for a tree on these vertices
    }
    // connected + |E| = |V|-1 => tree
    let mut t = Graph::empty(g.n()).expect("host order already validated");
    for (u, v) in tree.iter() {
        t.add_edge(u, v).expect("edges validated against host");
    }
    let start = verts.min().expect("nonempty");
    t.reachable_within(start, verts) == verts
}

/// Per-host bookkeeping shared by the searches.
struct Host {
    pairs: Vec<(usize, usize)>,
    /// edges with both endpoints in S (mask over `pairs` indices)
    ss_mask: u64,
    terminals: VertexSet,
    free_verts: u32,
}

/// A minimal S-tree as bit masks over the host's edge list.
#[derive(Clone, Copy)]
struct TreeCand {
    edges: u64,
    verts: u32,
}

fn edge_masks(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// All minimal S-trees of `g`, sorted by (edge count, edge mask).
fn minimal_trees(g: &Graph, s: VertexSet) -> (Host, Vec<TreeCand>) {
    let pairs = edge_masks(g);
    let mut ss_mask = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if s.contains(u) && s.contains(v) {
            ss_mask |= 1 << i;
        }
    }
    let host = Host {
        pairs,
        ss_mask,
        terminals: s,
        free_verts: g.vertex_set().difference(s).0,
    };

    let mut found = Vec::new();
    let free = host.free_verts;
    // supersets W = S ∪ x for every subset x of the non-terminals, ascending
    let mut x = 0u32;
    loop {
        let w = VertexSet(s.0 | x);
        collect_spanning_trees(g, &host, w, &mut found);
        if x == free {
            break;
        }
        x = x.wrapping_sub(free) & free;
    }
    found.sort_unstable_by_key(|t| (t.edges.count_ones(), t.edges));
    (host, found)
}

/// Spanning trees of g[w] whose leaves all lie in the terminal set.
fn collect_spanning_trees(g: &Graph, host: &Host, w: VertexSet, out: &mut Vec<TreeCand>) {
    let wc = w.len();
    if wc < 2 {
        return;
    }
    // a non-terminal must be internal, which needs degree >= 2 inside g[w]
    for v in VertexSet(w.0 & host.free_verts).iter() {
        if g.neighbors(v).intersection(w).len() < 2 {
            return;
        }
    }
    if g.reachable_within(w.min().unwrap(), w) != w {
        return;
    }
    let local: Vec<usize> = host
        .pairs
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| w.contains(u) && w.contains(v))
        .map(|(i, _)| i)
        .collect();
    if local.len() < wc - 1 {
        return;
    }

    // DSU over vertices; recursive combination search in edge-index order
    let mut parent = [0usize; 32];
    for v in 0..32 {
        parent[v] = v;
    }
    fn find(parent: &mut [usize; 32], v: usize) -> usize {
        let mut v = v;
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    struct Ctx<'a> {
        host: &'a Host,
        local: &'a [usize],
        need: usize,
        out: &'a mut Vec<TreeCand>,
        w: VertexSet,
    }
    fn descend(
        ctx: &mut Ctx<'_>,
        parent: &mut [usize; 32],
        from: usize,
        chosen: u64,
        count: usize,
    ) {
        if count == ctx.need {
            // spanning tree of g[w]; keep it when all leaves are terminals
            let mut deg = [0u8; 32];
            let mut rest = chosen;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (u, v) = ctx.host.pairs[i];
                deg[u] += 1;
                deg[v] += 1;
            }
            let ok = ctx
                .w
                .iter()
                .all(|v| deg[v] != 1 || ctx.host.terminals.contains(v));
            if ok {
                ctx.out.push(TreeCand { edges: chosen, verts: ctx.w.0 });
            }
            return;
        }
        if ctx.local.len() - from < ctx.need - count {
            return;
        }
        for pos in from..ctx.local.len() {
            if ctx.local.len() - pos < ctx.need - count {
                break;
            }
            let i = ctx.local[pos];
            let (u, v) = ctx.host.pairs[i];
            let ru = find(parent, u);
            let rv = find(parent, v);
            if ru == rv {
                continue; // cycle
            }
            let saved = *parent;
            parent[ru] = rv;
            descend(ctx, parent, pos + 1, chosen | 1 << i, count + 1);
            *parent = saved;
        }
    }
    let mut ctx = Ctx { host, local: &local, need: wc - 1, out, w };
    descend(&mut ctx, &mut parent, 0, 0, 0);
}

/// Backtracking packer over the sorted minimal-tree list.
fn pack(
    host: &Host,
    trees: &[TreeCand],
    t: usize,
    k: usize,
    m: usize,
) -> Option<Vec<usize>> {
    fn step(
        host: &Host,
        trees: &[TreeCand],
        k: usize,
        m: usize,
        remaining: usize,
        from: usize,
        used_edges: u64,
        used_internal: u32,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        // every further tree needs k-1 unused edges
        let free_edges = m - used_edges.count_ones() as usize;
        if remaining * (k - 1) > free_edges {
            return false;
        }
        // trees confined to the terminals burn terminal-terminal edges; all
        // others claim at least one fresh internal vertex
        let free_internal = (host.free_verts & !used_internal).count_ones() as usize;
        let ss_left = (host.ss_mask & !used_edges).count_ones() as usize;
        if remaining > free_internal + ss_left / (k - 1) {
            return false;
        }
        for i in from..trees.len() {
            let cand = trees[i];
            if cand.edges & used_edges != 0 {
                continue;
            }
            let internal = cand.verts & host.free_verts;
            if internal & used_internal != 0 {
                continue;
            }
            chosen.push(i);
            if step(
                host,
                trees,
                k,
                m,
                remaining - 1,
                i + 1,
                used_edges | cand.edges,
                used_internal | internal,
                chosen,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let k = k.max(2);
    let mut chosen = Vec::with_capacity(t);
    if step(host, trees, k, m, t, 0, 0, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn packing_from(host: &Host, trees: &[TreeCand], chosen: &[usize]) -> SteinerPacking {
    let trees = chosen
        .iter()
        .map(|&i| {
            let mut set = EdgeSet::new();
            let mut rest = trees[i].edges;
            while rest != 0 {
                let e = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (u, v) = host.pairs[e];
                set.insert(u, v);
            }
            set
        })
        .collect();
    SteinerPacking { terminals: host.terminals, trees }
}

fn validate_input(g: &Graph, s: VertexSet, budget: usize, op: &'static str) -> Result<()> {
    if g.n() > budget {
        return Err(Error::BudgetExceeded { op, n: g.n(), max: budget });
    }
    if !s.is_subset_of(g.vertex_set()) {
        return Err(Error::InvalidTerminals(format!(
            "{s:?} is not within 0..{}",
            g.n()
        )));
    }
    if s.len() < 2 {
        return Err(Error::InvalidTerminals("need at least two terminals".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Decision form: a packing of `t` internally disjoint S-trees, if one exists.
pub fn has_t_disjoint_steiner_trees(
    g: &Graph,
    s: VertexSet,
    t: usize,
) -> Result<Option<SteinerPacking>> {
    has_t_disjoint_steiner_trees_with_budget(g, s, t, STEINER_BUDGET)
}

pub fn has_t_disjoint_steiner_trees_with_budget(
    g: &Graph,
    s: VertexSet,
    t: usize,
    budget: usize,
) -> Result<Option<SteinerPacking>> {
    validate_input(g, s, budget, "has_t_disjoint_steiner_trees")?;
    if t == 0 {
        return Ok(Some(SteinerPacking { terminals: s, trees: Vec::new() }));
    }
    let (host, trees) = minimal_trees(g, s);
    Ok(pack(&host, &trees, t, s.len(), g.m()).map(|c| packing_from(&host, &trees, &c)))
}

/// kappa(S): the exact maximum packing size, with a witness of that size.
pub fn steiner_local_connectivity(g: &Graph, s: VertexSet) -> Result<(usize, SteinerPacking)> {
    steiner_local_connectivity_with_budget(g, s, STEINER_BUDGET)
}

pub fn steiner_local_connectivity_with_budget(
    g: &Graph,
    s: VertexSet,
    budget: usize,
) -> Result<(usize, SteinerPacking)> {
    validate_input(g, s, budget, "steiner_local_connectivity")?;
    let (host, trees) = minimal_trees(g, s);
    debug_assert!(!trees.is_empty(), "a connected graph has an S-tree");
    let mut best = pack(&host, &trees, 1, s.len(), g.m()).expect("connected graph");
    // decision-first: raise t until the packer fails
    let mut t = 2;
    while let Some(chosen) = pack(&host, &trees, t, s.len(), g.m()) {
        best = chosen;
        t += 1;
    }
    Ok((best.len(), packing_from(&host, &trees, &best)))
}

/// kappa-bar_k: the maximum of kappa(S) over all k-sets, with the
/// lexicographically first maximizing S.
pub fn max_generalized_local_connectivity(g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
    max_generalized_local_connectivity_with_budget(g, k, STEINER_BUDGET)
}

pub fn max_generalized_local_connectivity_with_budget(
    g: &Graph,
    k: usize,
    budget: usize,
) -> Result<(usize, VertexSet)> {
    check_k(g, k)?;
    let subsets = k_subsets(g.n(), k);
    subsets
        .par_iter()
        .map(|&s| steiner_local_connectivity_with_budget(g, s, budget).map(|(v, _)| (v, s)))
        .try_reduce_with(|a, b| Ok(pick_max(a, b)))
        .expect("at least one k-subset")
}

/// kappa_k: the minimum of kappa(S) over all k-sets.
pub fn generalized_k_connectivity(g: &Graph, k: usize) -> Result<usize> {
    generalized_k_connectivity_with_budget(g, k, STEINER_BUDGET)
}

pub fn generalized_k_connectivity_with_budget(
    g: &Graph,
    k: usize,
    budget: usize,
) -> Result<usize> {
    check_k(g, k)?;
    let subsets = k_subsets(g.n(), k);
    subsets
        .par_iter()
        .map(|&s| steiner_local_connectivity_with_budget(g, s, budget).map(|(v, _)| v))
        .try_reduce_with(|a, b| Ok(a.min(b)))
        .expect("at least one k-subset")
}

/// First k-set (in ascending mask order) admitting `t` internally disjoint
/// trees, with its packing. `None` means kappa-bar_k < t.
pub fn first_set_with_t_trees(
    g: &Graph,
    k: usize,
    t: usize,
) -> Result<Option<(VertexSet, SteinerPacking)>> {
    first_set_with_t_trees_with_budget(g, k, t, STEINER_BUDGET)
}

pub fn first_set_with_t_trees_with_budget(
    g: &Graph,
    k: usize,
    t: usize,
    budget: usize,
) -> Result<Option<(VertexSet, SteinerPacking)>> {
    check_k(g, k)?;
    for s in k_subsets(g.n(), k) {
        if let Some(p) = has_t_disjoint_steiner_trees_with_budget(g, s, t, budget)? {
            return Ok(Some((s, p)));
        }
    }
    Ok(None)
}

/// True iff kappa-bar_k(g) = 1: no k-set admits two internally disjoint trees.
pub fn kappa_bar_equals_one(g: &Graph, k: usize) -> Result<bool> {
    Ok(first_set_with_t_trees(g, k, 2)?.is_none())
}

pub fn kappa_bar_equals_one_with_budget(g: &Graph, k: usize, budget: usize) -> Result<bool> {
    Ok(first_set_with_t_trees_with_budget(g, k, 2, budget)?.is_none())
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.n() {
        return Err(Error::InvalidTerminals(format!(
            "k = {k} must satisfy 2 <= k <= n = {}",
            g.n()
        )));
    }
    Ok(())
}

fn pick_max(a: (usize, VertexSet), b: (usize, VertexSet)) -> (usize, VertexSet) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 {
                a
            } else {
                b
            }
        }
    }
}
