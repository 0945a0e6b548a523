//! The tree families `T(3)` and `T(2k+1)`: forward generators from base
//! trees, structural membership tests, and component classification.
//!
//! Members of both families are built the same way. Start from a base tree
//! `R`, subdivide edges once, and hang pendant edges so that the assignment
//! "pendant edges 1, every other edge 1/2" gives each branch vertex h-degree
//! `k + 1/2` and every other vertex h-degree 1.
//!
//! * `T(3)`: `R` is a `{1,3}`-tree; subdivide every edge of `R` and give
//!   every leaf of `R` a new pendant edge.
//! * `T(2k+1)`, `k >= 2`: every vertex `v` of the inner tree `R - Leaf(R)`
//!   has odd inner degree `2r+1 <= 2k+1`, and `2 l(v) + 2r + 1 <= 2k+1`
//!   where `l(v)` counts the leaves of `R` at `v`. Subdivide the inner edges
//!   and top `v` up with `k - r - l(v)` new pendant edges when `2r+1 < 2k+1`.
//!
//! Membership is decided from degrees and paths alone, so it is invariant
//! under relabelling. `P5` (the image of the degenerate base `R = K2`) is
//! kept out of `T(3)` and classified as its own class; stars are kept out
//! of `T(2k+1)` and classified as `Star(j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fractional::HalfIntegralAssignment;
use crate::graph::Graph;

/// Which component family a factor is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `{P2, C3, P5, T(3)}`, the family for `k = 1`.
    F1,
    /// `{K_{1,1}, ..., K_{1,k}, T(2k+1)}` for `k >= 2`.
    F2(u32),
}

impl Family {
    /// The family that goes with parameter `k`.
    pub fn for_k(k: u32) -> Result<Self> {
        match k {
            0 => Err(Error::InvalidK),
            1 => Ok(Family::F1),
            k => Ok(Family::F2(k)),
        }
    }

    pub fn k(&self) -> u32 {
        match *self {
            Family::F1 => 1,
            Family::F2(k) => k,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::F1 => f.write_str("F1"),
            Family::F2(k) => write!(f, "F2(k={k})"),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Class of one component of a component factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentClass {
    P2,
    C3,
    P5,
    Star(usize),
    T3,
    T2k1(u32),
    Other,
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::P2 => f.write_str("P2"),
            ComponentClass::C3 => f.write_str("C3"),
            ComponentClass::P5 => f.write_str("P5"),
            ComponentClass::Star(j) => write!(f, "Star({j})"),
            ComponentClass::T3 => f.write_str("T3"),
            ComponentClass::T2k1(k) => write!(f, "T2k1({k})"),
            ComponentClass::Other => f.write_str("Other"),
        }
    }
}

impl FromStr for ComponentClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arg = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse::<u32>().ok())
        };
        Ok(match s {
            "P2" => ComponentClass::P2,
            "C3" => ComponentClass::C3,
            "P5" => ComponentClass::P5,
            "T3" => ComponentClass::T3,
            "Other" => ComponentClass::Other,
            _ => {
                if let Some(j) = arg("Star(") {
                    ComponentClass::Star(j as usize)
                } else if let Some(k) = arg("T2k1(") {
                    ComponentClass::T2k1(k)
                } else {
                    return Err(Error::UnknownClass(s.to_string()));
                }
            }
        })
    }
}

impl Serialize for ComponentClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) == 1).collect()
}

/// `R` is a tree whose degrees are all 1 or 3.
pub fn is_13_tree(r: &Graph) -> bool {
    r.is_tree() && (0..r.order()).all(|v| matches!(r.degree(v), 1 | 3))
}

/// Checks the base-tree conditions for `T(2k+1)`: `R` is a tree with a
/// non-empty inner tree, every inner degree is odd and at most `2k+1`, and
/// `2 * (leaves at v) + (inner degree of v) <= 2k+1`.
pub fn validate_base_tree(r: &Graph, k: u32) -> bool {
    base_tree_violation(r, k).is_none()
}

fn base_tree_violation(r: &Graph, k: u32) -> Option<String> {
    if k < 2 {
        return Some(format!("k = {k} is below 2"));
    }
    if !r.is_tree() {
        return Some("not a tree".into());
    }
    let top = 2 * k as usize + 1;
    let is_leaf = |v: usize| r.degree(v) == 1;
    let inner: Vec<usize> = (0..r.order()).filter(|&v| !is_leaf(v)).collect();
    if inner.is_empty() {
        return Some("R - Leaf(R) is empty".into());
    }
    for v in inner {
        let leaf_count = r.neighbors(v).iter().filter(|&&w| is_leaf(w)).count();
        let inner_degree = r.degree(v) - leaf_count;
        if inner_degree.is_multiple_of(2) || inner_degree > top {
            return Some(format!("vertex {v} has inner degree {inner_degree}"));
        }
        if 2 * leaf_count + inner_degree > top {
            return Some(format!(
                "vertex {v}: 2*{leaf_count} + {inner_degree} exceeds {top}"
            ));
        }
    }
    None
}

/// Builds `T_R` from a `{1,3}`-tree `R` with at least one degree-3 vertex.
///
/// Vertices of `R` keep their ids; subdivision vertices follow in edge
/// order, then the new pendant vertices in leaf order.
pub fn generate_t3(r: &Graph) -> Result<Graph> {
    if !is_13_tree(r) {
        return Err(Error::NotABaseTree("not a {1,3}-tree".into()));
    }
    if (0..r.order()).all(|v| r.degree(v) != 3) {
        return Err(Error::NotABaseTree(
            "a {1,3}-tree without degree-3 vertices yields P5, which is classified apart".into(),
        ));
    }
    let mut next = r.order();
    let mut edges = Vec::new();
    for &(u, v) in r.edges() {
        edges.push((u, next));
        edges.push((next, v));
        next += 1;
    }
    for leaf in leaves(r) {
        edges.push((leaf, next));
        next += 1;
    }
    Graph::from_edges(next, edges)
}

/// Builds `T_R` for `T(2k+1)` from a base tree satisfying
/// [`validate_base_tree`].
pub fn generate_t2k1(r: &Graph, k: u32) -> Result<Graph> {
    if let Some(why) = base_tree_violation(r, k) {
        return Err(Error::NotABaseTree(why));
    }
    let is_leaf = |v: usize| r.degree(v) == 1;
    let mut next = r.order();
    let mut edges = Vec::new();
    for &(u, v) in r.edges() {
        if is_leaf(u) || is_leaf(v) {
            edges.push((u, v));
        } else {
            edges.push((u, next));
            edges.push((next, v));
            next += 1;
        }
    }
    let top = 2 * k as usize + 1;
    for v in (0..r.order()).filter(|&v| !is_leaf(v)) {
        let leaf_count = r.neighbors(v).iter().filter(|&&w| is_leaf(w)).count();
        let inner_degree = r.degree(v) - leaf_count;
        if inner_degree < top {
            let half = (inner_degree - 1) / 2;
            for _ in 0..(k as usize - half - leaf_count) {
                edges.push((v, next));
                next += 1;
            }
        }
    }
    Graph::from_edges(next, edges)
}

/// Pendant edges get 1, every other edge 1/2.
pub fn canonical_assignment(t: &Graph) -> HalfIntegralAssignment {
    let units = t
        .edges()
        .iter()
        .map(|&(u, v)| {
            if t.degree(u) == 1 || t.degree(v) == 1 {
                2
            } else {
                1
            }
        })
        .collect();
    HalfIntegralAssignment::from_half_units(t, units).expect("one value per edge")
}

/// Walks from `start` through `first` while the current vertex has degree
/// 2. Returns the far end and the number of degree-2 vertices passed.
pub(crate) fn walk_chain(
    degree: impl Fn(usize) -> usize,
    neighbors: impl Fn(usize) -> Vec<usize>,
    start: usize,
    first: usize,
) -> (usize, Vec<usize>) {
    let mut prev = start;
    let mut cur = first;
    let mut interior = Vec::new();
    while degree(cur) == 2 && cur != start {
        interior.push(cur);
        let next = neighbors(cur)
            .into_iter()
            .find(|&w| w != prev)
            .expect("degree-2 vertex has a second neighbour");
        prev = cur;
        cur = next;
    }
    (cur, interior)
}

/// Structural test for `T(3)`.
pub fn is_t3_member(t: &Graph) -> bool {
    if !t.is_tree() || (0..t.order()).any(|v| t.degree(v) > 3) {
        return false;
    }
    let branches: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) == 3).collect();
    if branches.is_empty() {
        return false;
    }
    branches.iter().all(|&x| {
        t.neighbors(x).iter().all(|&w| {
            let (end, interior) = walk_chain(|v| t.degree(v), |v| t.neighbors(v).to_vec(), x, w);
            match t.degree(end) {
                3 => interior.len() == 1,
                1 => interior.len() == 2,
                _ => false,
            }
        })
    })
}

/// Structural test for `T(2k+1)`, `k >= 2`.
pub fn is_t2k1_member(t: &Graph, k: u32) -> bool {
    if k < 2 || !t.is_tree() {
        return false;
    }
    let n = t.order();
    let branch = |v: usize| t.degree(v) >= 3;
    if (0..n).filter(|&v| branch(v)).count() < 2 {
        return false;
    }
    (0..n).all(|v| match t.degree(v) {
        1 => branch(t.neighbors(v)[0]),
        2 => t.neighbors(v).iter().all(|&w| branch(w)),
        _ => {
            let mut pendant = 0;
            let mut subdivided = 0;
            for &w in t.neighbors(v) {
                match t.degree(w) {
                    1 => pendant += 1,
                    2 => subdivided += 1,
                    _ => return false,
                }
            }
            2 * pendant + subdivided == 2 * k as usize + 1
        }
    })
}

/// `K_{1,j}` with `j >= 1`; returns `j`.
fn star_size(t: &Graph) -> Option<usize> {
    let n = t.order();
    if n < 2 || !t.is_tree() {
        return None;
    }
    let centre_found = (0..n).any(|v| t.degree(v) == n - 1);
    centre_found.then_some(n - 1)
}

fn is_path(t: &Graph) -> bool {
    t.is_tree() && (0..t.order()).all(|v| t.degree(v) <= 2)
}

/// Classifies a connected graph against `family`.
pub fn classify_component(t: &Graph, family: Family) -> ComponentClass {
    match family {
        Family::F1 => {
            if t.order() == 2 && t.size() == 1 {
                ComponentClass::P2
            } else if t.order() == 3 && t.size() == 3 {
                ComponentClass::C3
            } else if t.order() == 5 && is_path(t) {
                ComponentClass::P5
            } else if is_t3_member(t) {
                ComponentClass::T3
            } else {
                ComponentClass::Other
            }
        }
        Family::F2(k) => match star_size(t) {
            Some(j) if j <= k as usize => ComponentClass::Star(j),
            Some(_) => ComponentClass::Other,
            None if is_t2k1_member(t, k) => ComponentClass::T2k1(k),
            None => ComponentClass::Other,
        },
    }
}
