//! The rule catalogs. Each rule looks for its configuration in the current
//! factor and returns the rewrite for the first match.

use super::cycles::{cycle_order, cyclic_blocks, find_even_cycle};
use super::{Color, ColoredFactor, RuleStep};
use crate::families::walk_chain;
use crate::graph::{norm, Edge};

/// Which rule set drives [`minimize_with`](super::minimize_with).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Catalog {
    /// Rules `R1`..`R8`, for `k = 1`.
    Unit,
    /// Rules `S1`..`S9`, for `k >= 2`.
    Large,
}

impl Catalog {
    pub fn for_k(k: u32) -> Self {
        if k == 1 {
            Catalog::Unit
        } else {
            Catalog::Large
        }
    }

    pub(super) fn accepts(self, k: u32) -> bool {
        Catalog::for_k(k) == self
    }

    pub(super) fn k_hint(self) -> u32 {
        match self {
            Catalog::Unit => 1,
            Catalog::Large => 2,
        }
    }
}

struct View<'a> {
    f: &'a ColoredFactor,
    adj: Vec<Vec<usize>>,
    hd: Vec<u32>,
    top: u32,
}

impl<'a> View<'a> {
    fn new(f: &'a ColoredFactor) -> Self {
        let mut adj = vec![Vec::new(); f.n];
        for &(u, v) in f.colors.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        View {
            f,
            adj,
            hd: f.h_degrees(),
            top: 2 * f.k + 1,
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn color(&self, u: usize, v: usize) -> Color {
        self.f.color(u, v).expect("edge of the factor")
    }

    fn chain(&self, start: usize, first: usize) -> (usize, Vec<usize>) {
        walk_chain(|v| self.deg(v), |v| self.adj[v].clone(), start, first)
    }

    fn other_neighbor(&self, v: usize, not: usize) -> usize {
        debug_assert_eq!(self.deg(v), 2);
        if self.adj[v][0] == not {
            self.adj[v][1]
        } else {
            self.adj[v][0]
        }
    }

    /// Connected components of the support that are paths on at least two
    /// vertices, each listed from its smaller end.
    fn path_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] || self.deg(s) != 1 {
                continue;
            }
            let (end, interior) = self.chain(s, self.adj[s][0]);
            if self.deg(end) != 1 {
                continue;
            }
            let mut path = vec![s];
            path.extend(interior);
            path.push(end);
            for &v in &path {
                seen[v] = true;
            }
            out.push(path);
        }
        out
    }
}

fn edges_along(seq: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    seq.windows(2).map(|w| norm(w[0], w[1]))
}

fn closed_edges(cycle: &[usize]) -> Vec<Edge> {
    let len = cycle.len();
    (0..len)
        .map(|i| norm(cycle[i], cycle[(i + 1) % len]))
        .collect()
}

/// Builds a step, dropping recolourings that change nothing.
fn step(
    view: &View,
    rule: &'static str,
    location: Vec<usize>,
    mut removed: Vec<Edge>,
    recolored: Vec<(Edge, Color)>,
) -> RuleStep {
    removed.sort_unstable();
    let recolored = recolored
        .into_iter()
        .filter(|&((u, v), c)| view.color(u, v) != c)
        .collect();
    RuleStep {
        rule,
        location,
        removed,
        recolored,
    }
}

/// Alternate edges along `edges`: even positions red, odd ones removed.
fn alternate(edges: &[Edge]) -> (Vec<Edge>, Vec<(Edge, Color)>) {
    let mut removed = Vec::new();
    let mut red = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        if i % 2 == 0 {
            red.push((e, Color::Red));
        } else {
            removed.push(e);
        }
    }
    (removed, red)
}

pub(super) fn next_step(f: &ColoredFactor, catalog: Catalog) -> Option<RuleStep> {
    let view = View::new(f);
    match catalog {
        Catalog::Unit => even_cycle(&view, "R1")
            .or_else(|| adjacent_branches(&view, "R2"))
            .or_else(|| odd_cycle_with_branch(&view, "R3"))
            .or_else(|| odd_cycle_to_p5(&view))
            .or_else(|| long_branch_chain(&view, "R5"))
            .or_else(|| leaf_chain_unit(&view))
            .or_else(|| even_path(&view))
            .or_else(|| odd_path_to_p5(&view)),
        Catalog::Large => even_cycle(&view, "S1")
            .or_else(|| adjacent_branches(&view, "S2"))
            .or_else(|| odd_cycle_with_branch(&view, "S3"))
            .or_else(|| odd_cycle_to_p3(&view))
            .or_else(|| long_branch_chain(&view, "S5"))
            .or_else(|| short_branch_chain(&view))
            .or_else(|| leaf_chain_large(&view))
            .or_else(|| branch_with_room(&view))
            .or_else(|| red_edge_to_branch(&view)),
    }
}

/// An even cycle: keep a perfect matching of it, in red.
fn even_cycle(view: &View, rule: &'static str) -> Option<RuleStep> {
    let cycle = find_even_cycle(&view.adj)?;
    let (removed, red) = alternate(&closed_edges(&cycle));
    Some(step(view, rule, cycle, removed, red))
}

/// Two adjacent vertices of degree at least 3: drop the edge between them.
fn adjacent_branches(view: &View, rule: &'static str) -> Option<RuleStep> {
    (0..view.n()).filter(|&u| view.deg(u) >= 3).find_map(|u| {
        view.adj[u]
            .iter()
            .find(|&&v| v > u && view.deg(v) >= 3)
            .map(|&v| step(view, rule, vec![u, v], vec![(u, v)], vec![]))
    })
}

/// Odd cycles that are blocks, in their canonical order.
fn odd_cycle_blocks(view: &View) -> Vec<Vec<usize>> {
    cyclic_blocks(&view.adj)
        .into_iter()
        .filter(|b| b.is_cycle() && b.vertices.len() % 2 == 1)
        .map(|b| cycle_order(&b, view.n()))
        .collect()
}

/// An odd cycle through a branch vertex `v` whose cycle neighbours have
/// degree 2. Cut `v u2` and match the path `C - v` in red from `u1`.
fn odd_cycle_with_branch(view: &View, rule: &'static str) -> Option<RuleStep> {
    for cycle in odd_cycle_blocks(view) {
        let len = cycle.len();
        let Some(at) = (0..len)
            .filter(|&i| view.deg(cycle[i]) >= 3)
            .min_by_key(|&i| cycle[i])
        else {
            continue;
        };
        let (a, b) = (cycle[(at + 1) % len], cycle[(at + len - 1) % len]);
        if view.deg(a) != 2 || view.deg(b) != 2 {
            continue;
        }
        // Walk from v towards the smaller neighbour.
        let forward = a < b;
        let path: Vec<usize> = (1..len)
            .map(|s| {
                if forward {
                    cycle[(at + s) % len]
                } else {
                    cycle[(at + len - s) % len]
                }
            })
            .collect();
        let v = cycle[at];
        let path_edges: Vec<Edge> = edges_along(&path).collect();
        let (mut removed, red) = alternate(&path_edges);
        removed.push(norm(v, *path.last().unwrap()));
        return Some(step(view, rule, cycle, removed, red));
    }
    None
}

/// Odd cycle components, rotated so the P5 or P3 starts at the smallest
/// vertex.
fn odd_cycle_components(view: &View, min_len: usize) -> Option<Vec<usize>> {
    odd_cycle_blocks(view)
        .into_iter()
        .find(|c| c.len() >= min_len && c.iter().all(|&v| view.deg(v) == 2))
}

/// An odd cycle component of length at least 5 becomes a P5 with red ends
/// plus red pairs.
fn odd_cycle_to_p5(view: &View) -> Option<RuleStep> {
    let cycle = odd_cycle_components(view, 5)?;
    let edges = closed_edges(&cycle);
    Some(p5_then_pairs(view, "R4", cycle, &edges))
}

/// A P5 `e0 e1 e2 e3` coloured red, blue, blue, red, then alternate
/// removed and red along the rest.
fn p5_then_pairs(
    view: &View,
    rule: &'static str,
    location: Vec<usize>,
    edges: &[Edge],
) -> RuleStep {
    let mut recolored = vec![
        (edges[0], Color::Red),
        (edges[1], Color::Blue),
        (edges[2], Color::Blue),
        (edges[3], Color::Red),
    ];
    let (removed, red) = alternate(&edges[4..]);
    // alternate() keeps even positions; after the P5 the first edge goes.
    let (removed, red) = flip(removed, red);
    recolored.extend(red);
    step(view, rule, location, removed, recolored)
}

/// Swaps the roles from [`alternate`]: even positions removed, odd red.
fn flip(removed: Vec<Edge>, red: Vec<(Edge, Color)>) -> (Vec<Edge>, Vec<(Edge, Color)>) {
    let now_removed = red.into_iter().map(|(e, _)| e).collect();
    let now_red = removed.into_iter().map(|e| (e, Color::Red)).collect();
    (now_removed, now_red)
}

/// Any odd cycle component becomes a red P3 plus red pairs.
fn odd_cycle_to_p3(view: &View) -> Option<RuleStep> {
    let cycle = odd_cycle_components(view, 3)?;
    let edges = closed_edges(&cycle);
    let mut recolored = vec![(edges[0], Color::Red), (edges[1], Color::Red)];
    let (removed, red) = flip_alternate(&edges[2..]);
    recolored.extend(red);
    Some(step(view, "S4", cycle, removed, recolored))
}

fn flip_alternate(edges: &[Edge]) -> (Vec<Edge>, Vec<(Edge, Color)>) {
    let (removed, red) = alternate(edges);
    flip(removed, red)
}

/// Chains `x u1 .. un y` between branch vertices, as (x, interior, y).
fn branch_chains<'a>(view: &'a View) -> impl Iterator<Item = (usize, Vec<usize>, usize)> + 'a {
    (0..view.n())
        .filter(move |&x| view.deg(x) >= 3)
        .flat_map(move |x| {
            view.adj[x].iter().filter_map(move |&w| {
                let (y, interior) = view.chain(x, w);
                (y != x && view.deg(y) >= 3).then_some((x, interior, y))
            })
        })
}

/// Chain with at least two interior vertices between branch vertices: cut
/// at `un y`, make `u(n-1) un` red and the rest blue.
fn long_branch_chain(view: &View, rule: &'static str) -> Option<RuleStep> {
    let (x, interior, y) = branch_chains(view).find(|(_, i, _)| i.len() >= 2)?;
    let n = interior.len();
    let mut path = vec![x];
    path.extend(&interior);
    let edges: Vec<Edge> = edges_along(&path).collect();
    let mut recolored: Vec<(Edge, Color)> =
        edges[..n - 1].iter().map(|&e| (e, Color::Blue)).collect();
    recolored.push((edges[n - 1], Color::Red));
    path.push(y);
    Some(step(
        view,
        rule,
        path,
        vec![norm(interior[n - 1], y)],
        recolored,
    ))
}

/// Chains `z u1 .. un x` from a leaf `z`, as (z, interior, end).
fn leaf_chains<'a>(view: &'a View) -> impl Iterator<Item = (usize, Vec<usize>, usize)> + 'a {
    (0..view.n())
        .filter(move |&z| view.deg(z) == 1)
        .map(move |z| {
            let (end, interior) = view.chain(z, view.adj[z][0]);
            (z, interior, end)
        })
}

/// Leaf chains into a branch vertex whose length is not 2.
fn leaf_chain_unit(view: &View) -> Option<RuleStep> {
    leaf_chains(view)
        .filter(|&(_, ref i, x)| view.deg(x) >= 3 && (i.len() == 1 || i.len() >= 3))
        .map(|(z, interior, x)| {
            let n = interior.len();
            let mut path = vec![z];
            path.extend(&interior);
            let cut = norm(interior[n - 1], x);
            let recolored = if n == 1 {
                vec![]
            } else {
                // Edges u1 u2 .. u(n-1) un; the last is red.
                let edges: Vec<Edge> = edges_along(&interior).collect();
                let mut r: Vec<_> = edges[..n - 2].iter().map(|&e| (e, Color::Blue)).collect();
                r.push((edges[n - 2], Color::Red));
                r
            };
            path.push(x);
            step(view, "R6", path, vec![cut], recolored)
        })
        .next()
}

/// Path components of even order at least 4 split into red P2s.
fn even_path(view: &View) -> Option<RuleStep> {
    let path = view
        .path_components()
        .into_iter()
        .find(|p| p.len() >= 4 && p.len() % 2 == 0)?;
    let edges: Vec<Edge> = edges_along(&path).collect();
    let (removed, red) = alternate(&edges);
    Some(step(view, "R7", path, removed, red))
}

/// Path components of odd order at least 7 become a P5 plus red P2s.
fn odd_path_to_p5(view: &View) -> Option<RuleStep> {
    let path = view
        .path_components()
        .into_iter()
        .find(|p| p.len() >= 7 && p.len() % 2 == 1)?;
    let edges: Vec<Edge> = edges_along(&path).collect();
    Some(p5_then_pairs(view, "R8", path, &edges))
}

/// A chain `x u1 y` between branch vertices: drop `u1 y` when `x u1` is
/// red or can become red.
fn short_branch_chain(view: &View) -> Option<RuleStep> {
    branch_chains(view)
        .filter(|(_, i, _)| i.len() == 1)
        .find_map(|(x, interior, y)| {
            let u1 = interior[0];
            let red = view.color(x, u1) == Color::Red;
            (red || view.hd[x] < view.top).then(|| {
                step(
                    view,
                    "S6",
                    vec![x, u1, y],
                    vec![norm(u1, y)],
                    vec![(norm(x, u1), Color::Red)],
                )
            })
        })
}

/// Leaf chains for `k >= 2`.
fn leaf_chain_large(view: &View) -> Option<RuleStep> {
    leaf_chains(view).find_map(|(z, interior, end)| {
        let n = interior.len();
        let mut path = vec![z];
        path.extend(&interior);
        path.push(end);
        if view.deg(end) == 1 {
            if n < 2 {
                return None;
            }
            // A path component: cut u1 u2, make u2 u3 red.
            return Some(step(
                view,
                "S7",
                path.clone(),
                vec![norm(path[1], path[2])],
                vec![(norm(path[2], path[3]), Color::Red)],
            ));
        }
        if view.deg(end) < 3 {
            return None;
        }
        match n {
            0 => None,
            1 => Some(step(view, "S7", path, vec![norm(interior[0], end)], vec![])),
            _ => {
                let edges: Vec<Edge> = edges_along(&path[..=n]).collect();
                let mut recolored = vec![(edges[0], Color::Red)];
                recolored.extend(edges[1..n - 1].iter().map(|&e| (e, Color::Blue)));
                recolored.push((edges[n - 1], Color::Red));
                let cut = norm(interior[n - 1], end);
                Some(step(view, "S7", path, vec![cut], recolored))
            }
        }
    })
}

/// A branch vertex `u` below the upper bound next to `v` of degree 2 whose
/// other neighbour `z` also has degree 2: cut `u v`, make `v z` red.
fn branch_with_room(view: &View) -> Option<RuleStep> {
    (0..view.n())
        .filter(|&u| view.deg(u) >= 3 && view.hd[u] < view.top)
        .find_map(|u| {
            view.adj[u].iter().find_map(|&v| {
                if view.deg(v) != 2 {
                    return None;
                }
                let z = view.other_neighbor(v, u);
                (view.deg(z) == 2).then(|| {
                    step(
                        view,
                        "S8",
                        vec![u, v, z],
                        vec![norm(u, v)],
                        vec![(norm(v, z), Color::Red)],
                    )
                })
            })
        })
}

/// A red edge without leaves: drop it between two branch vertices, or drop
/// the edge from its degree-2 end to a branch vertex beyond.
fn red_edge_to_branch(view: &View) -> Option<RuleStep> {
    view.f.edges().find_map(|((x, y), c)| {
        if c != Color::Red || view.deg(x) == 1 || view.deg(y) == 1 {
            return None;
        }
        if view.deg(x) >= 3 && view.deg(y) >= 3 {
            return Some(step(view, "S9", vec![x, y], vec![(x, y)], vec![]));
        }
        [(x, y), (y, x)].into_iter().find_map(|(a, b)| {
            if view.deg(a) != 2 {
                return None;
            }
            let z = view.other_neighbor(a, b);
            (view.deg(z) >= 3).then(|| step(view, "S9", vec![b, a, z], vec![norm(a, z)], vec![]))
        })
    })
}
