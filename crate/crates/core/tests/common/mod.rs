//! Slow, obviously-correct reference computations shared by the
//! integration tests. None of these call into the algorithms they check.

#![allow(dead_code)]

use factorsmith::Graph;

/// Number of vertices outside `s` whose neighbours all lie in `s`.
pub fn iso_count(g: &Graph, s: u64) -> usize {
    (0..g.order())
        .filter(|&v| s >> v & 1 == 0)
        .filter(|&v| g.neighbors(v).iter().all(|&w| s >> w & 1 == 1))
        .count()
}

/// Some `S` with `iso(G - S) > (num/den)|S|`, scanning every subset.
pub fn iso_violation(g: &Graph, num: u64, den: u64) -> Option<u64> {
    (0..1u64 << g.order()).find(|&s| iso_count(g, s) as u64 * den > num * s.count_ones() as u64)
}

/// Isolated toughness as a reduced fraction, `None` for infinity.
pub fn toughness(g: &Graph) -> Option<(u64, u64)> {
    let mut best: Option<(u64, u64)> = None;
    for s in 0..1u64 << g.order() {
        let iso = iso_count(g, s) as u64;
        if iso < 2 {
            continue;
        }
        let size = s.count_ones() as u64;
        if best.is_none_or(|(a, b)| size * b < a * iso) {
            best = Some((size, iso));
        }
    }
    best.map(|(a, b)| {
        let d = gcd(a, b);
        (a / d, b / d)
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Size of a maximum matching by trying every edge subset.
pub fn max_matching_size(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// A `(g, f)`-factor exists among `0..=mult` copies per pair, by trying all
/// choices. `pairs` lists `(u, v, multiplicity)`.
pub fn gf_factor_exists(n: usize, pairs: &[(usize, usize, u8)], g: &[u32], f: &[u32]) -> bool {
    fn go(i: usize, pairs: &[(usize, usize, u8)], deg: &mut [u32], g: &[u32], f: &[u32]) -> bool {
        let Some(&(u, v, m)) = pairs.get(i) else {
            return (0..deg.len()).all(|x| g[x] <= deg[x] && deg[x] <= f[x]);
        };
        for c in 0..=m as u32 {
            deg[u] += c;
            deg[v] += c;
            let found = go(i + 1, pairs, deg, g, f);
            deg[u] -= c;
            deg[v] -= c;
            if found {
                return true;
            }
        }
        false
    }
    go(0, pairs, &mut vec![0; n], g, f)
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}
