//! Cycle/ear structure: fast classifiers for graphs where every 3-terminal
//! (resp. 4-terminal) set admits only one tree, plus a literal ear search
//! used to cross-validate them.
//!
//! The production classifiers look only at the bridgeless components: a
//! component that is a singleton or a cycle keeps kappa-bar_3 at one, and
//! allowing a cycle with a single ear is exactly what keeps kappa-bar_4 at
//! one. The literal search below enumerates cycles and their ears instead,
//! which is exponential but independent of that reasoning.

use crate::blocks::{block_decomposition, ComponentClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{EdgeSet, VertexSet};

/// Largest vertex count the literal cycle/ear search accepts.
pub const EAR_SEARCH_BUDGET: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EarKind {
    Open,
    Closed,
}

/// A path `u_1 .. u_q` meeting its host cycle exactly in `{u_1, u_q}`;
/// closed when the endpoints coincide.
#[derive(Debug, Clone)]
pub struct Ear {
    pub cycle: EdgeSet,
    pub path: Vec<usize>,
    pub kind: EarKind,
}

impl Ear {
    /// Number of edges of the ear path.
    pub fn length(&self) -> usize {
        self.path.len() - 1
    }

    fn internal_mask(&self) -> u32 {
        let mut m = 0u32;
        for &v in &self.path[1..self.path.len() - 1] {
            m |= 1 << v;
        }
        m
    }

    /// Checks the ear against its host graph and cycle.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let cv = self.cycle.vertices();
        let p = &self.path;
        if p.len() < 2 {
            return Err(Error::InvalidWitness("ear path too short".into()));
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidWitness(format!("missing edge {}-{}", w[0], w[1])));
            }
        }
        let (first, last) = (p[0], p[p.len() - 1]);
        if !cv.contains(first) || !cv.contains(last) {
            return Err(Error::InvalidWitness("ear endpoints must lie on the cycle".into()));
        }
        let interior = &p[1..p.len() - 1];
        let mut seen = VertexSet::EMPTY;
        for &v in interior {
            if cv.contains(v) || seen.contains(v) {
                return Err(Error::InvalidWitness("ear interior must avoid the cycle".into()));
            }
            seen.insert(v);
        }
        match self.kind {
            EarKind::Closed if first != last => {
                return Err(Error::InvalidWitness("closed ear endpoints differ".into()))
            }
            EarKind::Open if first == last => {
                return Err(Error::InvalidWitness("open ear endpoints coincide".into()))
            }
            EarKind::Open if self.length() < 1 => {
                return Err(Error::InvalidWitness("open ear needs length >= 1".into()))
            }
            EarKind::Closed if self.length() < 3 => {
                return Err(Error::InvalidWitness("closed ear needs length >= 3".into()))
            }
            _ => {}
        }
        Ok(())
    }
}

/// Every simple cycle of `g`, as vertex sequences starting at the cycle's
/// smallest vertex, each cycle listed once.
fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(g.n());
    for anchor in 0..g.n() {
        path.push(anchor);
        dfs_cycles(g, anchor, &mut path, VertexSet::singleton(anchor), &mut out);
        path.pop();
    }
    out
}

fn dfs_cycles(
    g: &Graph,
    anchor: usize,
    path: &mut Vec<usize>,
    visited: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    let v = *path.last().unwrap();
    for u in g.neighbors(v).iter() {
        if u == anchor && path.len() >= 3 && path[1] < v {
            out.push(path.clone());
        }
        if u > anchor && !visited.contains(u) {
            path.push(u);
            let mut vis = visited;
            vis.insert(u);
            dfs_cycles(g, anchor, path, vis, out);
            path.pop();
        }
    }
}

fn cycle_edge_set(cycle: &[usize]) -> EdgeSet {
    let mut es = EdgeSet::new();
    for i in 0..cycle.len() {
        es.insert(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    es
}

/// All ears of the given cycle, sorted by (length, path).
fn ears_of_cycle(g: &Graph, cycle: &[usize]) -> Vec<Ear> {
    let ces = cycle_edge_set(cycle);
    let cv = ces.vertices();
    let mut ears = Vec::new();

    // chords: length-1 open ears
    let cyc: Vec<usize> = cv.to_vec();
    for (i, &u) in cyc.iter().enumerate() {
        for &v in cyc.iter().skip(i + 1) {
            if g.has_edge(u, v) && !ces.contains(u, v) {
                ears.push(Ear { cycle: ces.clone(), path: vec![u, v], kind: EarKind::Open });
            }
        }
    }

    // longer ears: walk off the cycle and record each return to it
    for start in cv.iter() {
        let mut path = vec![start];
        dfs_ears(g, cv, &ces, &mut path, VertexSet::EMPTY, &mut ears);
    }

    ears.sort_by(|a, b| (a.length(), &a.path).cmp(&(b.length(), &b.path)));
    ears
}

fn dfs_ears(
    g: &Graph,
    cv: VertexSet,
    ces: &EdgeSet,
    path: &mut Vec<usize>,
    interior: VertexSet,
    out: &mut Vec<Ear>,
) {
    let v = *path.last().unwrap();
    let start = path[0];
    for u in g.neighbors(v).iter() {
        if cv.contains(u) {
            if path.len() >= 2 {
                // endpoint pair dedup: open ears once via start < u, closed
                // ears once via first interior < last interior
                let record = if u == start {
                    path.len() >= 3 && path[1] < v
                } else {
                    start < u
                };
                if record {
                    let mut p = path.clone();
                    p.push(u);
                    let kind = if u == start { EarKind::Closed } else { EarKind::Open };
                    out.push(Ear { cycle: ces.clone(), path: p, kind });
                }
            }
        } else if !interior.contains(u) {
            path.push(u);
            let mut inner = interior;
            inner.insert(u);
            dfs_ears(g, cv, ces, path, inner, out);
            path.pop();
        }
    }
}

/// Looks for `threshold` pairwise internally disjoint ears among `ears`,
/// returning the lexicographically first selection.
fn disjoint_ear_subset(ears: &[Ear], threshold: usize) -> Option<Vec<usize>> {
    fn step(
        ears: &[Ear],
        target: usize,
        from: usize,
        used: u32,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        if ears.len() - from < target - chosen.len() {
            return false;
        }
        for i in from..ears.len() {
            let mask = ears[i].internal_mask();
            if mask & used != 0 {
                continue;
            }
            chosen.push(i);
            if step(ears, target, i + 1, used | mask, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(threshold);
    if step(ears, threshold, 0, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// First cycle (ordered by length, then vertex sequence) carrying at least
/// `threshold` pairwise internally disjoint ears, with witnesses.
pub fn find_cycle_with_ears(
    g: &Graph,
    threshold: usize,
) -> Result<Option<(EdgeSet, Vec<Ear>)>> {
    if g.n() > EAR_SEARCH_BUDGET {
        return Err(Error::BudgetExceeded {
            op: "find_cycle_with_ears",
            n: g.n(),
            max: EAR_SEARCH_BUDGET,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut cycles = all_cycles(g);
    cycles.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    for cycle in cycles {
        let ears = ears_of_cycle(g, &cycle);
        if let Some(chosen) = disjoint_ear_subset(&ears, threshold) {
            let witness = chosen.into_iter().map(|i| ears[i].clone()).collect();
            return Ok(Some((cycle_edge_set(&cycle), witness)));
        }
    }
    Ok(None)
}

/// True iff kappa-bar_3(g) = 1: every bridgeless component is a singleton or
/// a cycle, i.e. no cycle of `g` has an ear.
pub fn kappa3_equals_one(g: &Graph) -> Result<bool> {
    let d = block_decomposition(g)?;
    Ok(d.components
        .iter()
        .all(|&(_, c)| matches!(c, ComponentClass::Singleton | ComponentClass::Cycle)))
}

/// True iff kappa-bar_4(g) = 1: every bridgeless component is a singleton, a
/// cycle, or a cycle with one ear, i.e. no cycle of `g` has two ears.
pub fn kappa4_equals_one(g: &Graph) -> Result<bool> {
    let d = block_decomposition(g)?;
    Ok(d.components.iter().all(|&(_, c)| {
        matches!(
            c,
            ComponentClass::Singleton | ComponentClass::Cycle | ComponentClass::CycleWithOneEar
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle 0-1-2 with a closed 3-ear hung on each corner.
    fn three_closed_ears() -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        for u in 0..3 {
            let (a, b) = (3 + 2 * u, 4 + 2 * u);
            edges.extend([(u, a), (a, b), (b, u)]);
        }
        Graph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn chorded_cycle_has_an_ear() {
        let mut g = Graph::cycle(5).unwrap();
        g.add_edge(0, 2).unwrap();
        let (cycle, ears) = find_cycle_with_ears(&g, 1).unwrap().expect("one ear");
        assert_eq!(ears.len(), 1);
        ears[0].validate(&g).unwrap();
        assert!(!cycle.is_empty());
        assert!(find_cycle_with_ears(&g, 2).unwrap().is_none());
    }

    #[test]
    fn plain_cycle_has_none() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(find_cycle_with_ears(&c6, 1).unwrap().is_none());
    }

    #[test]
    fn three_closed_ears_give_two_disjoint_ones() {
        let g = three_closed_ears();
        assert_eq!((g.n(), g.m()), (9, 12));
        let (cycle, ears) = find_cycle_with_ears(&g, 2).unwrap().expect("two ears");
        assert_eq!(cycle.len(), 3, "witness cycle is the central triangle");
        assert_eq!(ears.len(), 2);
        for e in &ears {
            e.validate(&g).unwrap();
            assert_eq!(e.kind, EarKind::Closed);
        }
        // even three pairwise disjoint ears exist here
        assert!(find_cycle_with_ears(&g, 3).unwrap().is_some());
    }

    #[test]
    fn classifier_examples() {
        // chains of triangles
        let c3 = Graph::cycle(3).unwrap();
        let two = c3.add_operation(&c3, 0, 0).unwrap();
        assert!(kappa3_equals_one(&two).unwrap());
        assert!(kappa4_equals_one(&two).unwrap());

        // diamond: a triangle with an open ear of length 2
        let b = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!kappa3_equals_one(&b).unwrap());
        assert!(kappa4_equals_one(&b).unwrap());

        assert!(!kappa4_equals_one(&Graph::complete(4).unwrap()).unwrap());

        // trees have no cycles at all
        assert!(kappa3_equals_one(&Graph::path(6).unwrap()).unwrap());

        // theta(2,2,3): order 6, size 7, bridgeless, one ear
        let theta = Graph::from_edges(
            6,
            &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1)],
        )
        .unwrap();
        assert!(kappa4_equals_one(&theta).unwrap());
        assert!(!kappa3_equals_one(&theta).unwrap());
    }

    #[test]
    fn classifiers_agree_with_literal_search_up_to_6() {
        // shortcut soundness, exhaustively over connected graphs on <= 6 vertices
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
                if !g.is_connected() {
                    continue;
                }
                let c = crate::canon::canonical_form(&g);
                if !seen.insert(c) {
                    continue;
                }
                assert_eq!(
                    kappa3_equals_one(&g).unwrap(),
                    find_cycle_with_ears(&g, 1).unwrap().is_none(),
                    "k3 vs ear search on {g:?}"
                );
                assert_eq!(
                    kappa4_equals_one(&g).unwrap(),
                    find_cycle_with_ears(&g, 2).unwrap().is_none(),
                    "k4 vs ear search on {g:?}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::cycle(13).unwrap();
        assert!(matches!(
            find_cycle_with_ears(&g, 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
