//! Canonical forms by lexicographic minimization of the row-major
//! upper-triangle adjacency bit string.
//!
//! The search assigns new labels 0, 1, 2, ... one at a time, maintaining an
//! ordered partition of the unassigned vertices into cells that map onto
//! consecutive label ranges. Placing vertex `v` at the next label fixes the
//! whole row of bits for that label: within every later cell the minimal
//! arrangement puts non-neighbors of `v` before neighbors, which both
//! determines the row value and refines the partition. Rows are compared
//! against the best complete labeling found so far and worse branches are cut.

use crate::graph::Graph;

/// Row bits for one label, packed so that numeric order equals lexicographic
/// order of the bit string (column `j` sits at bit `n-1-j`).
type Row = u32;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_rows: Vec<Row>,
    best_perm: Vec<usize>,
    have_best: bool,
}

impl<'a> Search<'a> {
    /// Row value produced by putting `v` at label `t` with the given future
    /// cells: inside each cell, neighbors of `v` occupy the cell's last slots.
    fn row_for(&self, v: usize, t: usize, cells: &[Vec<usize>]) -> Row {
        let nbrs = self.g.neighbors(v);
        let mut row: Row = 0;
        let mut label = t + 1;
        for cell in cells {
            let members = cell.len();
            let hits = cell.iter().filter(|&&u| nbrs.contains(u)).count();
            for j in label + members - hits..label + members {
                row |= 1 << (self.n - 1 - j);
            }
            label += members;
        }
        row
    }

    fn split_cells(&self, v: usize, cells: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let nbrs = self.g.neighbors(v);
        let mut out = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            let (non, hit): (Vec<usize>, Vec<usize>) =
                cell.iter().partition(|&&u| !nbrs.contains(u));
            if !non.is_empty() {
                out.push(non);
            }
            if !hit.is_empty() {
                out.push(hit);
            }
        }
        out
    }

    fn descend(&mut self, rows: &mut Vec<Row>, perm_inv: &mut Vec<usize>, cells: &[Vec<usize>]) {
        let t = perm_inv.len();
        if t + 1 >= self.n {
            // last label (or single vertex) carries no row bits of its own
            let mut full = perm_inv.clone();
            if let Some(cell) = cells.first() {
                full.push(cell[0]);
            }
            if !self.have_best || rows[..] < self.best_rows[..] {
                self.best_rows = rows.clone();
                self.best_perm = full;
                self.have_best = true;
            }
            return;
        }

        // candidates for label t come from the first cell
        let first = &cells[0];
        let rest: Vec<Vec<usize>> = cells[1..].to_vec();
        let mut options: Vec<(Row, usize)> = first
            .iter()
            .map(|&v| {
                let mut future = Vec::with_capacity(cells.len());
                let remainder: Vec<usize> = first.iter().copied().filter(|&u| u != v).collect();
                if !remainder.is_empty() {
                    future.push(remainder);
                }
                future.extend(rest.iter().cloned());
                (self.row_for(v, t, &future), v)
            })
            .collect();
        options.sort_unstable();

        for (row, v) in options {
            if self.have_best {
                match rows
                    .iter()
                    .chain(std::iter::once(&row))
                    .cmp(self.best_rows[..=t].iter())
                {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less | std::cmp::Ordering::Equal => {}
                }
            }
            let mut future = Vec::with_capacity(cells.len());
            let remainder: Vec<usize> = first.iter().copied().filter(|&u| u != v).collect();
            if !remainder.is_empty() {
                future.push(remainder);
            }
            future.extend(rest.iter().cloned());
            let refined = self.split_cells(v, &future);

            rows.push(row);
            perm_inv.push(v);
            self.descend(rows, perm_inv, &refined);
            perm_inv.pop();
            rows.pop();
        }
    }
}

/// The relabeling that minimizes the adjacency bit string, as a map from old
/// vertex to new label.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let mut search = Search { g, n, best_rows: Vec::new(), best_perm: Vec::new(), have_best: false };
    let cells = vec![(0..n).collect::<Vec<usize>>()];
    let mut rows = Vec::with_capacity(n);
    let mut perm_inv = Vec::with_capacity(n);
    search.descend(&mut rows, &mut perm_inv, &cells);
    debug_assert!(search.have_best);
    // best_perm maps label -> old vertex; invert it
    let mut perm = vec![0usize; n];
    for (label, &old) in search.best_perm.iter().enumerate() {
        perm[old] = label;
    }
    perm
}

/// The isomorph of `g` whose row-major upper-triangle adjacency bit string is
/// lexicographically smallest. Two graphs are isomorphic iff their canonical
/// forms are equal.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn all_labeled_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 != 0)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    /// Reference minimization: all n! permutations.
    fn canonical_bruteforce(g: &Graph) -> Graph {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 1 {
                return vec![vec![0]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for at in 0..n {
                    let mut q = p.clone();
                    q.insert(at, n - 1);
                    out.push(q);
                }
            }
            out
        }
        permutations(g.n())
            .into_iter()
            .map(|p| g.permuted(&p))
            .min()
            .unwrap()
    }

    #[test]
    fn matches_bruteforce_on_all_graphs_up_to_5() {
        for n in 1..=5usize {
            for g in all_labeled_graphs(n) {
                assert_eq!(canonical_form(&g), canonical_bruteforce(&g), "n={n} g={g:?}");
            }
        }
    }

    #[test]
    fn relabelings_of_c5_agree() {
        let c5 = Graph::cycle(5).unwrap();
        let canon = canonical_form(&c5);
        let perms = [
            vec![2, 0, 4, 1, 3],
            vec![4, 3, 2, 1, 0],
            vec![1, 3, 0, 4, 2],
        ];
        for p in perms {
            assert_eq!(canonical_form(&c5.permuted(&p)), canon);
        }
        assert_eq!(canonical_form(&canon), canon, "idempotent");
    }

    #[test]
    fn path_and_star_on_three_vertices_coincide() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let star = Graph::from_edges(3, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(canonical_form(&p3), canonical_form(&star));
    }

    #[test]
    fn four_vertex_connected_classes() {
        // brute force over all 2^6 labeled graphs: exactly 6 connected classes
        let mut canon = std::collections::BTreeSet::new();
        for g in all_labeled_graphs(4) {
            if g.is_connected() {
                canon.insert(canonical_form(&g));
            }
        }
        assert_eq!(canon.len(), 6);
    }

    #[test]
    fn labeling_is_consistent_with_form() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 5), (5, 1), (1, 0), (2, 4), (4, 0)]).unwrap();
        let perm = canonical_labeling(&g);
        assert_eq!(g.permuted(&perm), canonical_form(&g));
    }
}
