//! Maximum cardinality matching in general graphs (Edmonds' blossom search).
//!
//! The search grows an alternating BFS forest from one exposed root at a
//! time, contracting odd cycles into their base vertex. Each search is
//! `O(n^2)` worst case, so a full run is `O(n^3)`; the gadget graphs built by
//! the factor engine stay small enough for that to be irrelevant.

use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, stored as a mate table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched edges, each as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Checks that every pair is an edge of `g` and the table is symmetric.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.order()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => g.has_edge(u, v) && self.mate[v] == Some(u),
            })
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        let mut mate = vec![NONE; n];
        // Greedy start; augmenting searches only run from what is left.
        for v in 0..n {
            if mate[v] == NONE {
                if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE && w != v) {
                    mate[v] = w;
                    mate[w] = v;
                }
            }
        }
        Search {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its exposed far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }

    /// Runs searches from every exposed vertex. With `stop_on_failure`, gives
    /// up at the first root that cannot be augmented, since such a root stays
    /// exposed in every maximum matching.
    fn run(mut self, stop_on_failure: bool) -> Option<Vec<usize>> {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            match self.find_path(v) {
                Some(end) => self.augment(end),
                None if stop_on_failure => return None,
                None => {}
            }
        }
        Some(self.mate)
    }
}

fn to_matching(mate: Vec<usize>) -> Matching {
    Matching {
        mate: mate.into_iter().map(|m| (m != NONE).then_some(m)).collect(),
    }
}

/// A maximum matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    max_matching_adj(&adj)
}

pub(crate) fn max_matching_adj(adj: &[Vec<usize>]) -> Matching {
    to_matching(Search::new(adj).run(false).expect("never stops early"))
}

/// A perfect matching of the graph given by adjacency lists, if one exists.
pub(crate) fn perfect_matching_adj(adj: &[Vec<usize>]) -> Option<Matching> {
    if adj.len() % 2 == 1 {
        return None;
    }
    Search::new(adj).run(true).map(to_matching)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(max_matching(&Graph::cycle(4)).size(), 2);
        assert_eq!(max_matching(&Graph::complete(3)).size(), 1);
        assert_eq!(max_matching(&Graph::empty(4)).size(), 0);
        assert_eq!(max_matching(&Graph::star(5)).size(), 1);
    }

    #[test]
    fn petersen_is_perfect() {
        let g = Graph::petersen();
        let m = max_matching(&g);
        assert_eq!(m.size(), 5);
        assert!(m.is_perfect());
        assert!(m.is_valid_for(&g));
    }

    #[test]
    fn augments_past_greedy() {
        // Greedy takes (0,1) and (2,3); only 4-0=1-2=3-5 reaches size 3.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (3, 5)]).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_for(&g));
    }

    #[test]
    fn perfect_detection() {
        let adj = |g: &Graph| -> Vec<Vec<usize>> {
            (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
        };
        assert!(perfect_matching_adj(&adj(&Graph::cycle(6))).is_some());
        assert!(perfect_matching_adj(&adj(&Graph::star(3))).is_none());
        assert!(perfect_matching_adj(&adj(&Graph::cycle(5))).is_none());
    }
}
