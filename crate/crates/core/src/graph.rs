//! Simple graphs, vertex sets and the doubled multigraph.
//!
//! Vertices are dense ids `0..n`. Every [`Graph`] keeps a sorted edge list
//! (each edge stored once as `(u, v)` with `u < v`), sorted adjacency lists,
//! and, for `n <= 64`, one `u64` neighbourhood mask per vertex. The masks
//! drive the exhaustive subset searches in [`crate::conditions`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge, normalised so that `.0 < .1`.
pub type Edge = (usize, usize);

pub(crate) fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Largest order for which neighbourhood masks are kept.
pub const MASK_LIMIT: usize = 64;

/// An immutable undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::build(n, Vec::new())
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push(norm(u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::build(n, list))
    }

    fn build(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = if n <= MASK_LIMIT {
            adj.iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | 1 << w))
                .collect()
        } else {
            Vec::new()
        };
        Graph {
            n,
            edges,
            adj,
            masks,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::build(n, edges)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::build(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// The cycle on `n >= 3` vertices in index order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::build(n, edges)
    }

    /// `K_{1,j}` with centre 0.
    pub fn star(j: usize) -> Self {
        Self::build(j + 1, (1..=j).map(|v| (0, v)).collect())
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, edges).expect("petersen edges are valid")
    }

    /// Order `|G|`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size `||G||`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&norm(u, v)).ok()
    }

    /// Neighbourhood masks, available when `n <= 64`.
    pub fn masks(&self) -> Option<&[u64]> {
        (self.n <= MASK_LIMIT).then_some(self.masks.as_slice())
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices of degree zero, `Iso(G)`.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// The subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| norm(index[u], index[v]))
            .collect::<Vec<_>>();
        Graph::from_edges(vertices.len(), edges).expect("induced edges are valid")
    }

    /// The doubled multigraph `G*`: every edge gets two parallel copies.
    pub fn double(&self) -> MultiGraph {
        MultiGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| (u, v, 2)).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A loopless multigraph whose edge multiplicities are 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize, u8)>,
}

impl MultiGraph {
    /// Builds a multigraph from `(u, v, multiplicity)` triples. Repeated
    /// pairs add up; the total per pair must stay at most 2.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u8)>,
    {
        let mut map = std::collections::BTreeMap::<Edge, u8>::new();
        for (u, v, m) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            *map.entry(norm(u, v)).or_default() += m;
        }
        let edges: Vec<_> = map
            .into_iter()
            .filter(|&(_, m)| m > 0)
            .map(|((u, v), m)| (u, v, m))
            .collect();
        if let Some(&(u, v, _)) = edges.iter().find(|e| e.2 > 2) {
            return Err(Error::Multiplicity { u, v });
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Distinct vertex pairs with their multiplicities, sorted by pair.
    pub fn edges(&self) -> &[(usize, usize, u8)] {
        &self.edges
    }

    /// Number of edge copies, counting multiplicity.
    pub fn size(&self) -> usize {
        self.edges.iter().map(|e| e.2 as usize).sum()
    }

    /// Degrees counting every parallel copy.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v, m) in &self.edges {
            deg[u] += m as u32;
            deg[v] += m as u32;
        }
        deg
    }

    /// Every edge copy as `(u, v, copy_index)` in sorted order.
    pub fn copies(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.edges
            .iter()
            .flat_map(|&(u, v, m)| (0..m).map(move |c| (u, v, c)))
    }
}

/// A set of vertices, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    /// Bit mask of the set. Panics if a member is 64 or larger.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| {
            assert!(v < 64, "vertex {v} does not fit a mask");
            m | 1 << v
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn doubling_k2() {
        let m = Graph::complete(2).double();
        assert_eq!(m.edges(), &[(0, 1, 2)]);
        assert_eq!(m.degrees(), vec![2, 2]);
    }

    #[test]
    fn doubling_c3() {
        let m = Graph::cycle(3).double();
        assert_eq!(m.size(), 6);
        assert_eq!(m.degrees(), vec![4, 4, 4]);
    }

    #[test]
    fn doubling_edgeless() {
        let m = Graph::empty(5).double();
        assert_eq!(m.order(), 5);
        assert_eq!(m.size(), 0);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.size(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn multigraph_multiplicity_capped() {
        assert!(MultiGraph::from_edges(2, [(0, 1, 2), (1, 0, 1)]).is_err());
        let m = MultiGraph::from_edges(3, [(0, 1, 1), (1, 0, 1), (1, 2, 1)]).unwrap();
        assert_eq!(m.edges(), &[(0, 1, 2), (1, 2, 1)]);
        assert_eq!(m.copies().count(), 3);
    }

    #[test]
    fn vertex_set_display() {
        assert_eq!(VertexSet::new(vec![3, 0, 3]).to_string(), "{0, 3}");
        assert_eq!(VertexSet::from_mask(0b101).as_slice(), &[0, 2]);
    }
}
