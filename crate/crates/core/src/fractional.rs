//! Half-integral fractional `[1, k + 1/2]`-factors.
//!
//! Values are stored in half-units: `0`, `1`, `2` stand for `h(e) = 0, 1/2, 1`.
//! A graph has such a factor exactly when its doubled multigraph has a
//! `(2, 2k+1)`-factor; a pair kept twice, once or not at all maps to
//! `h = 1, 1/2, 0`.

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{find_gf_factor, find_gf_factor_with, DegreeBounds, GfEngine, SpanningSubgraph};
use crate::graph::{Edge, Graph};

/// Edge values of a fractional factor, aligned with the graph's edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralAssignment {
    edges: Vec<Edge>,
    half_units: Vec<u8>,
}

impl HalfIntegralAssignment {
    /// Values in half-units for every edge of `g`, in `g.edges()` order.
    pub fn from_half_units(g: &Graph, half_units: Vec<u8>) -> Result<Self> {
        if half_units.len() != g.size() {
            return Err(Error::AssignmentShape {
                expected: g.size(),
                got: half_units.len(),
            });
        }
        assert!(
            half_units.iter().all(|&h| h <= 2),
            "half-units must be 0, 1 or 2"
        );
        Ok(HalfIntegralAssignment {
            edges: g.edges().to_vec(),
            half_units,
        })
    }

    /// Values given per edge; unlisted edges get `0`.
    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u8)>,
    {
        let mut half_units = vec![0; g.size()];
        for (u, v, h) in pairs {
            let i = g.edge_index(u, v).ok_or(Error::NotAnEdge { u, v })?;
            half_units[i] = h.min(2);
        }
        Self::from_half_units(g, half_units)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn half_units(&self) -> &[u8] {
        &self.half_units
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u8)> + '_ {
        self.edges
            .iter()
            .copied()
            .zip(self.half_units.iter().copied())
    }

    /// `2 * deg^h(v)` for every vertex.
    pub fn h_degrees(&self, n: usize) -> Vec<u32> {
        let mut deg = vec![0; n];
        for ((u, v), h) in self.iter() {
            deg[u] += h as u32;
            deg[v] += h as u32;
        }
        deg
    }

    /// Number of edges with a non-zero value.
    pub fn support_size(&self) -> usize {
        self.half_units.iter().filter(|&&h| h > 0).count()
    }
}

impl Serialize for HalfIntegralAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            u: usize,
            v: usize,
            h: &'static str,
        }
        let mut seq = s.serialize_seq(Some(self.support_size()))?;
        for ((u, v), h) in self.iter().filter(|&(_, h)| h > 0) {
            let h = if h == 2 { "1" } else { "1/2" };
            seq.serialize_element(&Entry { u, v, h })?;
        }
        seq.end()
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidK)
    } else {
        Ok(())
    }
}

/// `(2, 2k+1)` bounds for the doubled graph.
pub fn doubled_bounds(n: usize, k: u32) -> Result<DegreeBounds> {
    check_k(k)?;
    DegreeBounds::constant(n, 2, 2 * k + 1)
}

fn from_factor(g: &Graph, factor: SpanningSubgraph) -> HalfIntegralAssignment {
    // Pairs of G* follow g.edges() one to one.
    HalfIntegralAssignment {
        edges: g.edges().to_vec(),
        half_units: factor.multiplicities().to_vec(),
    }
}

/// A fractional `[1, k + 1/2]`-factor with values in `{0, 1/2, 1}`, if any.
pub fn find_fractional_factor(g: &Graph, k: u32) -> Result<Option<HalfIntegralAssignment>> {
    let bounds = doubled_bounds(g.order(), k)?;
    Ok(find_gf_factor(&g.double(), &bounds)?.map(|f| from_factor(g, f)))
}

/// [`find_fractional_factor`] with an explicit engine.
pub fn find_fractional_factor_with(
    g: &Graph,
    k: u32,
    engine: GfEngine,
) -> Result<Option<HalfIntegralAssignment>> {
    let bounds = doubled_bounds(g.order(), k)?;
    Ok(find_gf_factor_with(&g.double(), &bounds, engine)?.map(|f| from_factor(g, f)))
}

/// First vertex whose h-degree leaves `[1, k + 1/2]`, if any.
pub(crate) fn first_violation(
    g: &Graph,
    k: u32,
    h: &HalfIntegralAssignment,
) -> Result<Option<usize>> {
    if h.edges.len() != g.size() {
        return Err(Error::AssignmentShape {
            expected: g.size(),
            got: h.edges.len(),
        });
    }
    if let Some(&(u, v)) = h.edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::NotAnEdge { u, v });
    }
    let top = 2 * k + 1;
    Ok(h.h_degrees(g.order())
        .iter()
        .position(|&d| !(2..=top).contains(&d)))
}

/// `1 <= deg^h(v) <= k + 1/2` at every vertex, in exact half-units.
pub fn verify_fractional(g: &Graph, k: u32, h: &HalfIntegralAssignment) -> Result<bool> {
    Ok(first_violation(g, k, h)?.is_none())
}

/// Largest edge count for [`minimum_support_factor`].
pub const MIN_SUPPORT_LIMIT: usize = 30;

/// A fractional `[1, k + 1/2]`-factor whose support has as few edges as
/// possible, found by branch and bound. Desk scale only.
pub fn minimum_support_factor(g: &Graph, k: u32) -> Result<Option<HalfIntegralAssignment>> {
    check_k(k)?;
    if g.size() > MIN_SUPPORT_LIMIT {
        return Err(Error::TooLarge {
            n: g.size(),
            max: MIN_SUPPORT_LIMIT,
        });
    }
    let n = g.order();
    let mut remaining = vec![0u32; n];
    for &(u, v) in g.edges() {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    if remaining.contains(&0) {
        return Ok(None);
    }
    let mut search = MinSupport {
        edges: g.edges(),
        top: 2 * k + 1,
        deg: vec![0; n],
        remaining,
        current: vec![0; g.size()],
        support: 0,
        best: None,
    };
    search.go(0);
    Ok(search.best.map(|(_, units)| HalfIntegralAssignment {
        edges: g.edges().to_vec(),
        half_units: units,
    }))
}

struct MinSupport<'a> {
    edges: &'a [Edge],
    top: u32,
    deg: Vec<u32>,
    remaining: Vec<u32>,
    current: Vec<u8>,
    support: usize,
    best: Option<(usize, Vec<u8>)>,
}

impl MinSupport<'_> {
    fn feasible(&self, v: usize) -> bool {
        self.deg[v] <= self.top && self.deg[v] + 2 * self.remaining[v] >= 2
    }

    fn go(&mut self, i: usize) {
        if let Some((best, _)) = &self.best {
            // Every still-uncovered vertex needs an edge; one edge covers two.
            let uncovered = self.deg.iter().filter(|&&d| d == 0).count();
            if self.support + uncovered.div_ceil(2) >= *best {
                return;
            }
        }
        let Some(&(u, v)) = self.edges.get(i) else {
            self.best = Some((self.support, self.current.clone()));
            return;
        };
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        for h in 0..=2u8 {
            self.deg[u] += h as u32;
            self.deg[v] += h as u32;
            self.support += (h > 0) as usize;
            if self.feasible(u) && self.feasible(v) {
                self.current[i] = h;
                self.go(i + 1);
            }
            self.support -= (h > 0) as usize;
            self.deg[u] -= h as u32;
            self.deg[v] -= h as u32;
        }
        self.current[i] = 0;
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_uses_every_edge() {
        let c3 = Graph::cycle(3);
        let h = find_fractional_factor(&c3, 1).unwrap().unwrap();
        assert!(verify_fractional(&c3, 1, &h).unwrap());
        assert!(h.half_units().iter().all(|&u| u > 0));
    }

    #[test]
    fn p3_has_none() {
        assert_eq!(find_fractional_factor(&Graph::path(3), 1).unwrap(), None);
    }

    #[test]
    fn stars_beyond_k_have_none() {
        for k in 1..=3 {
            let star = Graph::star(k as usize + 1);
            assert_eq!(find_fractional_factor(&star, k).unwrap(), None);
            assert!(find_fractional_factor(&Graph::star(k as usize), k)
                .unwrap()
                .is_some());
        }
    }

    #[test]
    fn k_zero_rejected() {
        assert!(matches!(
            find_fractional_factor(&Graph::cycle(3), 0),
            Err(Error::InvalidK)
        ));
    }

    #[test]
    fn verify_examples() {
        let p5 = Graph::path(5);
        let h = HalfIntegralAssignment::from_half_units(&p5, vec![2, 1, 1, 2]).unwrap();
        assert!(verify_fractional(&p5, 1, &h).unwrap());

        let k2 = Graph::complete(2);
        let h = HalfIntegralAssignment::from_half_units(&k2, vec![1]).unwrap();
        assert!(!verify_fractional(&k2, 1, &h).unwrap());

        let c3 = Graph::cycle(3);
        let h = HalfIntegralAssignment::from_half_units(&c3, vec![2, 2, 2]).unwrap();
        assert!(verify_fractional(&c3, 2, &h).unwrap());
        assert!(!verify_fractional(&c3, 1, &h).unwrap());
    }

    #[test]
    fn verify_rejects_foreign_edges() {
        let p3 = Graph::path(3);
        assert!(matches!(
            HalfIntegralAssignment::from_pairs(&p3, [(0, 2, 2)]),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        ));
        let c3 = Graph::cycle(3);
        let h = HalfIntegralAssignment::from_half_units(&c3, vec![1, 1, 1]).unwrap();
        assert!(matches!(
            verify_fractional(&p3, 1, &h),
            Err(Error::AssignmentShape { .. })
        ));
        let other = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let h = HalfIntegralAssignment::from_half_units(&p3, vec![2, 2]).unwrap();
        assert!(matches!(
            verify_fractional(&other, 1, &h),
            Err(Error::NotAnEdge { u: 1, v: 2 })
        ));
    }

    #[test]
    fn minimum_support_on_c5() {
        // C5 at k = 1 needs four edges: a P5 with red ends.
        let h = minimum_support_factor(&Graph::cycle(5), 1)
            .unwrap()
            .unwrap();
        assert_eq!(h.support_size(), 4);
        assert!(verify_fractional(&Graph::cycle(5), 1, &h).unwrap());
        assert_eq!(minimum_support_factor(&Graph::path(3), 1).unwrap(), None);
    }

    #[test]
    fn serializes_support_only() {
        let p3 = Graph::path(3);
        let h = HalfIntegralAssignment::from_half_units(&p3, vec![2, 0]).unwrap();
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"[{"u":0,"v":1,"h":"1"}]"#);
    }
}
