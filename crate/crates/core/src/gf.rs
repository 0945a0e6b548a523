//! `(g, f)`-factors of multigraphs with strict bounds `g < f`.
//!
//! A multigraph has a `(g, f)`-factor exactly when no vertex set `S` makes
//! `g(T) - deg_{G-S}(T)` exceed `f(S)`, where `T` collects the vertices
//! outside `S` whose degree in `G - S` is below `g`. This module provides the
//! exhaustive check of that inequality and two independent constructions:
//!
//! * [`GfEngine::Backtracking`] decides the multiplicity of every edge pair in
//!   sorted order, trying larger multiplicities first, and prunes as soon as a
//!   vertex exceeds `f` or can no longer reach `g`.
//! * [`GfEngine::Gadget`] reduces the problem to a perfect matching. Every
//!   edge copy becomes two adjacent vertices, one per end; vertex `v` gets
//!   `min(f(v), deg(v))` stubs, the first `g(v)` of them mandatory, each
//!   adjacent to every copy end at `v`. A copy is in the factor when both of
//!   its ends are matched to stubs. The optional stubs form a clique (plus one
//!   extra vertex when the total is odd) so that unused ones can pair off.

use crate::conditions::{for_each_subset, MAX_EXHAUSTIVE_ORDER};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexSet};
use crate::matching::perfect_matching_adj;

/// Copy count up to which [`find_gf_factor`] backtracks.
pub const BACKTRACK_LIMIT: usize = 40;

/// Per-vertex degree bounds with `g(v) < f(v)` everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    g: Vec<u32>,
    f: Vec<u32>,
}

impl DegreeBounds {
    pub fn new(g: Vec<u32>, f: Vec<u32>) -> Result<Self> {
        if g.len() != f.len() {
            return Err(Error::BoundsShape {
                expected: g.len(),
                got: f.len(),
            });
        }
        if let Some(v) = (0..g.len()).find(|&v| g[v] >= f[v]) {
            return Err(Error::NonStrictBounds {
                vertex: v,
                g: g[v],
                f: f[v],
            });
        }
        Ok(DegreeBounds { g, f })
    }

    pub fn constant(n: usize, g: u32, f: u32) -> Result<Self> {
        Self::new(vec![g; n], vec![f; n])
    }

    pub fn lower(&self, v: usize) -> u32 {
        self.g[v]
    }

    pub fn upper(&self, v: usize) -> u32 {
        self.f[v]
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    fn check_shape(&self, m: &MultiGraph) -> Result<()> {
        if self.len() != m.order() {
            return Err(Error::BoundsShape {
                expected: m.order(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// A spanning subgraph of a multigraph: how many copies of every edge pair
/// are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningSubgraph {
    base: MultiGraph,
    chosen: Vec<u8>,
}

impl SpanningSubgraph {
    pub fn new(base: MultiGraph, chosen: Vec<u8>) -> Result<Self> {
        if chosen.len() != base.edges().len() {
            return Err(Error::AssignmentShape {
                expected: base.edges().len(),
                got: chosen.len(),
            });
        }
        if let Some((i, _)) = chosen
            .iter()
            .enumerate()
            .find(|&(i, &c)| c > base.edges()[i].2)
        {
            let (u, v, _) = base.edges()[i];
            return Err(Error::Multiplicity { u, v });
        }
        Ok(SpanningSubgraph { base, chosen })
    }

    pub fn base(&self) -> &MultiGraph {
        &self.base
    }

    /// Chosen copy count per edge pair, aligned with `base().edges()`.
    pub fn multiplicities(&self) -> &[u8] {
        &self.chosen
    }

    /// Chosen copies as `(u, v, copy_index)`.
    pub fn copies(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.chosen)
            .flat_map(|(&(u, v, _), &c)| (0..c).map(move |i| (u, v, i)))
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0; self.base.order()];
        for (&(u, v, _), &c) in self.base.edges().iter().zip(&self.chosen) {
            deg[u] += c as u32;
            deg[v] += c as u32;
        }
        deg
    }

    /// `g(v) <= deg_F(v) <= f(v)` for every vertex.
    pub fn satisfies(&self, b: &DegreeBounds) -> bool {
        b.len() == self.base.order()
            && self
                .degrees()
                .iter()
                .enumerate()
                .all(|(v, &d)| b.lower(v) <= d && d <= b.upper(v))
    }
}

/// Which construction [`find_gf_factor_with`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfEngine {
    Backtracking,
    Gadget,
}

fn weighted_adjacency(m: &MultiGraph) -> Vec<Vec<(usize, u32)>> {
    let mut adj = vec![Vec::new(); m.order()];
    for &(u, v, c) in m.edges() {
        adj[u].push((v, c as u32));
        adj[v].push((u, c as u32));
    }
    adj
}

/// Searches every `S` (by size, then lexicographically) for a violation of
/// `g(T) - deg_{G-S}(T) <= f(S)`. `None` means no `S` violates it.
pub fn gf_condition_witness(m: &MultiGraph, b: &DegreeBounds) -> Result<Option<VertexSet>> {
    b.check_shape(m)?;
    let n = m.order();
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    let adj = weighted_adjacency(m);
    for size in 0..=n {
        let mut found = None;
        for_each_subset(n, size, |s| {
            let f_s: u64 = (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .map(|v| b.upper(v) as u64)
                .sum();
            let mut deficit = 0u64;
            for v in (0..n).filter(|&v| s >> v & 1 == 0) {
                let d: u32 = adj[v]
                    .iter()
                    .filter(|&&(w, _)| s >> w & 1 == 0)
                    .map(|&(_, c)| c)
                    .sum();
                if d < b.lower(v) {
                    deficit += (b.lower(v) - d) as u64;
                }
            }
            if deficit > f_s {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Ok(Some(VertexSet::from_mask(s)));
        }
    }
    Ok(None)
}

/// Finds a `(g, f)`-factor, backtracking for at most [`BACKTRACK_LIMIT`]
/// edge copies and using the matching gadget above that.
pub fn find_gf_factor(m: &MultiGraph, b: &DegreeBounds) -> Result<Option<SpanningSubgraph>> {
    let engine = if m.size() <= BACKTRACK_LIMIT {
        GfEngine::Backtracking
    } else {
        GfEngine::Gadget
    };
    find_gf_factor_with(m, b, engine)
}

pub fn find_gf_factor_with(
    m: &MultiGraph,
    b: &DegreeBounds,
    engine: GfEngine,
) -> Result<Option<SpanningSubgraph>> {
    b.check_shape(m)?;
    let degrees = m.degrees();
    if (0..m.order()).any(|v| degrees[v] < b.lower(v)) {
        return Ok(None);
    }
    let chosen = match engine {
        GfEngine::Backtracking => backtrack(m, b),
        GfEngine::Gadget => gadget(m, b),
    };
    Ok(chosen.map(|chosen| SpanningSubgraph {
        base: m.clone(),
        chosen,
    }))
}

struct Backtrack<'a> {
    edges: &'a [(usize, usize, u8)],
    b: &'a DegreeBounds,
    deg: Vec<u32>,
    remaining: Vec<u32>,
    chosen: Vec<u8>,
}

impl Backtrack<'_> {
    fn feasible(&self, v: usize) -> bool {
        self.deg[v] <= self.b.upper(v) && self.deg[v] + self.remaining[v] >= self.b.lower(v)
    }

    fn go(&mut self, i: usize) -> bool {
        let Some(&(u, v, m)) = self.edges.get(i) else {
            return true;
        };
        self.remaining[u] -= m as u32;
        self.remaining[v] -= m as u32;
        for c in (0..=m).rev() {
            self.deg[u] += c as u32;
            self.deg[v] += c as u32;
            if self.feasible(u) && self.feasible(v) {
                self.chosen[i] = c;
                if self.go(i + 1) {
                    return true;
                }
            }
            self.deg[u] -= c as u32;
            self.deg[v] -= c as u32;
        }
        self.remaining[u] += m as u32;
        self.remaining[v] += m as u32;
        false
    }
}

fn backtrack(m: &MultiGraph, b: &DegreeBounds) -> Option<Vec<u8>> {
    let mut state = Backtrack {
        edges: m.edges(),
        b,
        deg: vec![0; m.order()],
        remaining: m.degrees(),
        chosen: vec![0; m.edges().len()],
    };
    state.go(0).then_some(state.chosen)
}

fn gadget(m: &MultiGraph, b: &DegreeBounds) -> Option<Vec<u8>> {
    let n = m.order();
    let degrees = m.degrees();
    let copies: Vec<(usize, usize, usize)> = m
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v, c))| (0..c).map(move |_| (i, u, v)))
        .collect();

    // Vertex layout: copy ends, then stubs per vertex, then the parity vertex.
    let mut next = 2 * copies.len();
    let mut stubs: Vec<std::ops::Range<usize>> = Vec::with_capacity(n);
    let mut optional = Vec::new();
    for (v, &degree) in degrees.iter().enumerate() {
        let count = b.upper(v).min(degree) as usize;
        let start = next;
        next += count;
        optional.extend(start + b.lower(v) as usize..next);
        stubs.push(start..next);
    }
    let parity = (next % 2 == 1).then_some(next);
    if parity.is_some() {
        next += 1;
    }

    let mut adj = vec![Vec::new(); next];
    let link = |adj: &mut Vec<Vec<usize>>, x: usize, y: usize| {
        adj[x].push(y);
        adj[y].push(x);
    };
    for (c, &(_, u, v)) in copies.iter().enumerate() {
        let (end_u, end_v) = (2 * c, 2 * c + 1);
        link(&mut adj, end_u, end_v);
        for s in stubs[u].clone() {
            link(&mut adj, end_u, s);
        }
        for s in stubs[v].clone() {
            link(&mut adj, end_v, s);
        }
    }
    for (i, &x) in optional.iter().enumerate() {
        for &y in &optional[i + 1..] {
            link(&mut adj, x, y);
        }
        if let Some(p) = parity {
            link(&mut adj, x, p);
        }
    }

    let matching = perfect_matching_adj(&adj)?;
    let mut chosen = vec![0u8; m.edges().len()];
    for (c, &(i, _, _)) in copies.iter().enumerate() {
        if matching.mate(2 * c) != Some(2 * c + 1) {
            chosen[i] += 1;
        }
    }
    Some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn bounds(n: usize) -> DegreeBounds {
        DegreeBounds::constant(n, 2, 3).unwrap()
    }

    #[test]
    fn strict_bounds_required() {
        assert!(matches!(
            DegreeBounds::constant(3, 2, 2),
            Err(Error::NonStrictBounds { vertex: 0, .. })
        ));
        assert!(DegreeBounds::new(vec![0, 1], vec![1]).is_err());
    }

    #[test]
    fn doubled_p3_has_no_factor() {
        let m = Graph::path(3).double();
        assert!(gf_condition_witness(&m, &bounds(3)).unwrap().is_some());
        for engine in [GfEngine::Backtracking, GfEngine::Gadget] {
            assert!(find_gf_factor_with(&m, &bounds(3), engine)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn doubled_k2_uses_both_copies() {
        let m = Graph::complete(2).double();
        assert_eq!(gf_condition_witness(&m, &bounds(2)).unwrap(), None);
        for engine in [GfEngine::Backtracking, GfEngine::Gadget] {
            let f = find_gf_factor_with(&m, &bounds(2), engine)
                .unwrap()
                .unwrap();
            assert_eq!(f.multiplicities(), &[2]);
            assert_eq!(f.degrees(), vec![2, 2]);
        }
    }

    #[test]
    fn doubled_c3() {
        let m = Graph::cycle(3).double();
        assert_eq!(gf_condition_witness(&m, &bounds(3)).unwrap(), None);
        for engine in [GfEngine::Backtracking, GfEngine::Gadget] {
            let f = find_gf_factor_with(&m, &bounds(3), engine)
                .unwrap()
                .unwrap();
            assert!(f.satisfies(&bounds(3)));
        }
    }

    #[test]
    fn doubled_p5_backtracking_choice() {
        let m = Graph::path(5).double();
        let f = find_gf_factor(&m, &bounds(5)).unwrap().unwrap();
        assert_eq!(f.multiplicities(), &[2, 1, 1, 2]);
        assert_eq!(f.degrees(), vec![2, 3, 2, 3, 2]);
        assert_eq!(f.copies().count(), 6);
        let g = find_gf_factor_with(&m, &bounds(5), GfEngine::Gadget)
            .unwrap()
            .unwrap();
        assert!(g.satisfies(&bounds(5)));
    }

    #[test]
    fn shape_mismatch() {
        let m = Graph::path(3).double();
        assert!(gf_condition_witness(&m, &bounds(2)).is_err());
        assert!(find_gf_factor(&m, &bounds(4)).is_err());
    }

    #[test]
    fn single_copies() {
        // A triangle with single edges has exactly one (2,3)-factor: itself.
        let m = MultiGraph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        for engine in [GfEngine::Backtracking, GfEngine::Gadget] {
            let f = find_gf_factor_with(&m, &bounds(3), engine)
                .unwrap()
                .unwrap();
            assert_eq!(f.multiplicities(), &[1, 1, 1]);
        }
    }
}
