//! The isolated-vertex condition `iso(G - S) <= c|S|` and isolated toughness.
//!
//! Both searches run over vertex subsets `S` by increasing size, and within a
//! size in lexicographic order of the sorted member tuple, so the first
//! violator found is the lexicographically smallest one of minimum size.
//!
//! A size level `s` is skipped outright when it cannot contain a violator:
//! `iso(G - S)` never exceeds `n - s`, nor the number of vertices of degree
//! at most `s` (a vertex isolated by `S` has all its neighbours in `S`).
//! Minimum-size violators are always neighbourhood unions `S = N(I)`, so
//! these cut-offs never hide the reported witness.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ratio::Ratio;

/// Largest order accepted by the exhaustive subset searches.
pub const MAX_EXHAUSTIVE_ORDER: usize = 30;

/// A set `S` together with the vertices it isolates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionWitness {
    #[serde(rename = "S")]
    pub s: VertexSet,
    pub isolated: VertexSet,
}

/// Isolated toughness `I(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    Finite(Ratio),
    Infinite,
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => r.fmt(f),
            Toughness::Infinite => f.write_str("infinity"),
        }
    }
}

/// `Iso(G - S)`: vertices outside `S` whose whole neighbourhood lies in `S`.
pub fn iso_after_removal(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut removed = vec![false; g.order()];
    for v in s.iter() {
        removed[v] = true;
    }
    VertexSet::new(
        (0..g.order())
            .filter(|&v| !removed[v] && g.neighbors(v).iter().all(|&w| removed[w]))
            .collect(),
    )
}

#[inline]
pub(crate) fn iso_mask(masks: &[u64], s: u64) -> u64 {
    let mut out = 0;
    for (v, &m) in masks.iter().enumerate() {
        if s >> v & 1 == 0 && m & !s == 0 {
            out |= 1 << v;
        }
    }
    out
}

pub(crate) fn checked_masks(g: &Graph) -> Result<&[u64]> {
    if g.order() > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::TooLarge {
            n: g.order(),
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok(g.masks().expect("order is below the mask limit"))
}

/// Calls `visit` on every `size`-subset of `0..n` (as a bit mask) in
/// lexicographic order of the sorted members. Stops when `visit` returns
/// `true` and reports whether it did.
pub(crate) fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(u64) -> bool) -> bool {
    if size > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut mask: u64 = idx.iter().fold(0, |m, &i| m | 1 << i);
    loop {
        if visit(mask) {
            return true;
        }
        // Advance to the next combination.
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
        }
        mask &= !(1 << idx[i]);
        idx[i] += 1;
        mask |= 1 << idx[i];
        for j in i + 1..size {
            mask &= !(1 << idx[j]);
            idx[j] = idx[j - 1] + 1;
            mask |= 1 << idx[j];
        }
    }
}

/// Looks for `S` with `iso(G - S) > c|S|`.
///
/// Returns `None` when the condition holds for every `S`, including the
/// empty set (so any isolated vertex is already a violation). The order `n`
/// is limited to [`MAX_EXHAUSTIVE_ORDER`].
pub fn check_iso_condition(g: &Graph, c: Ratio) -> Result<Option<ConditionWitness>> {
    if c.is_zero() {
        return Err(Error::InvalidRatio(c.to_string()));
    }
    let masks = checked_masks(g)?;
    let n = g.order();
    let mut sorted_degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    sorted_degrees.sort_unstable();

    for size in 0..=n {
        let low_degree = sorted_degrees.partition_point(|&d| d <= size);
        let bound = low_degree.min(n - size);
        if !c.exceeded_by(bound, size) {
            if c.exceeded_by(n - size, size) {
                continue;
            }
            // n - s only shrinks as s grows: no larger S can violate.
            break;
        }
        let mut found = None;
        // TODO: split the subset range across rayon workers for n > 20.
        for_each_subset(n, size, |s| {
            let iso = iso_mask(masks, s);
            if c.exceeded_by(iso.count_ones() as usize, size) {
                found = Some((s, iso));
                true
            } else {
                false
            }
        });
        if let Some((s, iso)) = found {
            return Ok(Some(ConditionWitness {
                s: VertexSet::from_mask(s),
                isolated: VertexSet::from_mask(iso),
            }));
        }
    }
    Ok(None)
}

/// `I(G) = min |S| / iso(G - S)` over `S` with `iso(G - S) >= 2`, or
/// infinity when no such `S` exists (exactly the complete graphs).
pub fn isolated_toughness(g: &Graph) -> Result<Toughness> {
    let masks = checked_masks(g)?;
    let n = g.order();
    if g.is_complete() {
        return Ok(Toughness::Infinite);
    }
    let mut best: Option<(u64, u64)> = None;
    for size in 0..=n {
        let room = n - size;
        if room < 2 {
            break;
        }
        // Any S of this size scores at least size / (n - size).
        if let Some((a, b)) = best {
            if (size as u64) * b >= a * room as u64 {
                break;
            }
        }
        for_each_subset(n, size, |s| {
            let iso = iso_mask(masks, s).count_ones() as u64;
            if iso >= 2 {
                let better = match best {
                    None => true,
                    Some((a, b)) => (size as u64) * b < a * iso,
                };
                if better {
                    best = Some((size as u64, iso));
                }
            }
            false
        });
    }
    let (a, b) = best.expect("a non-complete graph has two non-adjacent vertices");
    Ok(Toughness::Finite(Ratio::new(a, b)))
}
