//! Graph corpora: exhaustive labelled enumeration, seeded random graphs,
//! random trees, and the raw material for the tree families.
//!
//! Every random stream is driven by `ChaCha8Rng::seed_from_u64(seed)`, whose
//! output is fixed by its specification, so a seed names the same corpus on
//! every machine.

use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::validate_base_tree;
use crate::formats::parse_graph6;
use crate::graph::Graph;

/// Largest order for [`enumerate_exhaustive`].
pub const MAX_EXHAUSTIVE: usize = 7;

/// An edge probability `num/den` in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::Corpus(format!(
                "probability {num}/{den} is not in [0, 1]"
            )));
        }
        Ok(Probability { num, den })
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> bool {
        rng.gen_range(0..self.den) < self.num
    }
}

impl FromStr for Probability {
    type Err = Error;

    /// `p/q`, `0` or `1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Corpus(format!("bad probability {s:?}: expected p/q, 0 or 1"));
        match s.split_once('/') {
            Some((p, q)) => {
                Probability::new(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?)
            }
            None => match s {
                "0" => Probability::new(0, 1),
                "1" => Probability::new(1, 1),
                _ => Err(bad()),
            },
        }
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A named, reproducible stream of graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    /// Every labelled graph on `n` vertices.
    Exhaustive(usize),
    Gnp {
        n: usize,
        p: Probability,
        count: usize,
        seed: u64,
    },
    /// Uniform random labelled trees.
    Trees { n: usize, count: usize, seed: u64 },
    /// `P2..=P(max)` then `C3..=C(max)`.
    PathsCycles(usize),
    /// Every non-isomorphic tree on `1..=max` vertices.
    FreeTrees(usize),
    /// One graph6 string per line.
    File(PathBuf),
}

/// Graphs with an id naming where they came from.
pub type CorpusStream = Box<dyn Iterator<Item = (String, Graph)> + Send>;

fn split_seed(fields: &mut Vec<&str>) -> Result<u64> {
    match fields.last().and_then(|f| f.strip_prefix("seed=")) {
        Some(seed) => {
            let seed = seed
                .parse()
                .map_err(|_| Error::Corpus(format!("bad seed {seed:?}")))?;
            fields.pop();
            Ok(seed)
        }
        None => Ok(0),
    }
}

fn number(field: &str, what: &str) -> Result<usize> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::Corpus(format!("bad {what} {field:?}")))
}

impl CorpusSpec {
    /// `n,p,count[,seed=S]`.
    pub fn parse_gnp(s: &str) -> Result<Self> {
        let mut fields: Vec<&str> = s.split(',').map(str::trim).collect();
        let seed = split_seed(&mut fields)?;
        let [n, p, count] = fields[..] else {
            return Err(Error::Corpus(format!(
                "expected n,p,count[,seed=S], got {s:?}"
            )));
        };
        Ok(CorpusSpec::Gnp {
            n: number(n, "order")?,
            p: p.parse()?,
            count: number(count, "count")?,
            seed,
        })
    }

    /// `n,count[,seed=S]`.
    pub fn parse_trees(s: &str) -> Result<Self> {
        let mut fields: Vec<&str> = s.split(',').map(str::trim).collect();
        let seed = split_seed(&mut fields)?;
        let [n, count] = fields[..] else {
            return Err(Error::Corpus(format!(
                "expected n,count[,seed=S], got {s:?}"
            )));
        };
        Ok(CorpusSpec::Trees {
            n: number(n, "order")?,
            count: number(count, "count")?,
            seed,
        })
    }

    /// Opens the stream. File corpora are read and parsed up front so that
    /// format errors surface before any work starts.
    pub fn graphs(&self) -> Result<CorpusStream> {
        Ok(match self.clone() {
            CorpusSpec::Exhaustive(n) => {
                let graphs = enumerate_exhaustive(n)?;
                Box::new(
                    graphs
                        .enumerate()
                        .map(move |(i, g)| (format!("n{n}#{i}"), g)),
                )
            }
            CorpusSpec::Gnp { n, p, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new((0..count).map(move |i| {
                    (
                        format!("gnp({n},{p},seed={seed})#{i}"),
                        gnp_with(n, p, &mut rng),
                    )
                }))
            }
            CorpusSpec::Trees { n, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new((0..count).map(move |i| {
                    (
                        format!("tree({n},seed={seed})#{i}"),
                        random_tree_with(n, &mut rng),
                    )
                }))
            }
            CorpusSpec::PathsCycles(max) => {
                let paths = (2..=max).map(|n| (format!("P{n}"), Graph::path(n)));
                let cycles = (3..=max).map(|n| (format!("C{n}"), Graph::cycle(n)));
                Box::new(paths.chain(cycles))
            }
            CorpusSpec::FreeTrees(max) => Box::new(
                free_trees_up_to(max)
                    .into_iter()
                    .enumerate()
                    .map(|(i, t)| (format!("tree{}#{i}", t.order()), t)),
            ),
            CorpusSpec::File(path) => {
                let text = std::fs::read_to_string(&path)?;
                let mut graphs = Vec::new();
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    let g = parse_graph6(line)
                        .map_err(|e| Error::Corpus(format!("{}:{}: {e}", path.display(), i + 1)))?;
                    graphs.push((format!("{}:{}", path.display(), i + 1), g));
                }
                Box::new(graphs.into_iter())
            }
        })
    }
}

/// All `2^(n(n-1)/2)` labelled graphs on `n` vertices, in order of the edge
/// bitmask over pairs `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn enumerate_exhaustive(n: usize) -> Result<impl Iterator<Item = Graph> + Send> {
    if !(1..=MAX_EXHAUSTIVE).contains(&n) {
        return Err(Error::TooLarge {
            n,
            max: MAX_EXHAUSTIVE,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are in range")
    }))
}

fn gnp_with(n: usize, p: Probability, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if p.sample(rng) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// `G(n, p)` from its own seeded generator.
pub fn random_gnp(n: usize, p: Probability, seed: u64) -> Graph {
    gnp_with(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Uniform labelled tree via a random Prüfer sequence.
fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

/// Random labelled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    random_tree_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A `{1,3}`-tree with `m` degree-3 vertices, grown from `K2` by hanging
/// two leaves on a random leaf `m` times.
pub fn random_13_tree(m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1)];
    let mut leaves = vec![0, 1];
    let mut next = 2;
    for _ in 0..m {
        let at = rng.gen_range(0..leaves.len());
        let v = leaves.swap_remove(at);
        edges.extend([(v, next), (v, next + 1)]);
        leaves.extend([next, next + 1]);
        next += 2;
    }
    Graph::from_edges(next, edges).expect("grown edges are in range")
}

const BASE_TREE_ATTEMPTS: usize = 64;

/// A base tree for `T(2k+1)` whose inner tree has about `size` vertices.
///
/// The inner tree grows from `K2` by hanging two new vertices on a vertex
/// with room, which keeps every degree odd. Each inner vertex of inner
/// degree `2r+1` then gets between 0 and `k - r` leaves (at least one when
/// `r = 0`, so it stays inner). Outputs are checked against
/// [`validate_base_tree`].
pub fn random_base_tree_2k1(k: u32, size: usize, seed: u64) -> Result<Graph> {
    if k < 2 {
        return Err(Error::NotABaseTree(format!("k = {k} is below 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = 2 * k as usize + 1;
    for _ in 0..BASE_TREE_ATTEMPTS {
        let mut degree = vec![1usize, 1];
        let mut edges = vec![(0, 1)];
        while degree.len() < size {
            let open: Vec<usize> = (0..degree.len())
                .filter(|&v| degree[v] + 2 <= top)
                .collect();
            let Some(&v) = open.choose(&mut rng) else {
                break;
            };
            let next = degree.len();
            edges.extend([(v, next), (v, next + 1)]);
            degree[v] += 2;
            degree.extend([1, 1]);
        }
        let inner = degree.len();
        let mut next = inner;
        for (v, &d) in degree.iter().enumerate() {
            let r = (d - 1) / 2;
            let low = usize::from(r == 0);
            let count = rng.gen_range(low..=k as usize - r);
            for _ in 0..count {
                edges.push((v, next));
                next += 1;
            }
        }
        let r = Graph::from_edges(next, edges)?;
        if validate_base_tree(&r, k) {
            return Ok(r);
        }
    }
    Err(Error::NotABaseTree(format!(
        "no valid base tree after {BASE_TREE_ATTEMPTS} attempts (k={k}, size={size})"
    )))
}

/// Canonical string of a tree: the smaller of the rooted encodings at its
/// centres. Two trees get the same string iff they are isomorphic.
pub fn tree_canonical_form(t: &Graph) -> String {
    assert!(t.is_tree() || t.order() == 0, "canonical form is for trees");
    let n = t.order();
    if n == 0 {
        return String::new();
    }
    // Peel leaves layer by layer; the last one or two vertices are centres.
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_form(t, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

fn rooted_form(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_form(t, w, v))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn free_trees(n: usize) -> Vec<Graph> {
    free_trees_up_to(n)
        .into_iter()
        .filter(|t| t.order() == n)
        .collect()
}

/// Every tree on `1..=max` vertices up to isomorphism, by order.
///
/// Each tree on `n + 1` vertices arises from one on `n` by adding a leaf;
/// canonical forms remove the duplicates.
pub fn free_trees_up_to(max: usize) -> Vec<Graph> {
    if max == 0 {
        return Vec::new();
    }
    let mut all = vec![Graph::empty(1)];
    let mut level = all.clone();
    for n in 2..=max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let edges = t.edges().iter().copied().chain([(v, n - 1)]);
                let grown = Graph::from_edges(n, edges).expect("leaf edge is in range");
                if seen.insert(tree_canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::is_13_tree;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(enumerate_exhaustive(2).unwrap().count(), 2);
        assert_eq!(enumerate_exhaustive(3).unwrap().count(), 8);
        assert_eq!(enumerate_exhaustive(4).unwrap().count(), 64);
        assert!(enumerate_exhaustive(8).is_err());
        assert!(enumerate_exhaustive(0).is_err());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        let zero = Probability::new(0, 1).unwrap();
        let one: Probability = "1".parse().unwrap();
        assert_eq!(random_gnp(6, zero, 3).size(), 0);
        assert!(random_gnp(6, one, 3).is_complete());
        let half: Probability = "1/2".parse().unwrap();
        assert_eq!(random_gnp(8, half, 1), random_gnp(8, half, 1));
        assert!("3/2".parse::<Probability>().is_err());
        assert!("0.5".parse::<Probability>().is_err());
    }

    #[test]
    fn spec_parsing() {
        let spec = CorpusSpec::parse_gnp("10,1/2,100,seed=7").unwrap();
        assert_eq!(spec.graphs().unwrap().count(), 100);
        let a: Vec<_> = spec.graphs().unwrap().collect();
        let b: Vec<_> = spec.graphs().unwrap().collect();
        assert_eq!(a, b);
        assert!(CorpusSpec::parse_gnp("10,1/2").is_err());
        assert_eq!(
            CorpusSpec::parse_trees("6,3").unwrap(),
            CorpusSpec::Trees {
                n: 6,
                count: 3,
                seed: 0
            }
        );
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..20 {
            for n in 1..10 {
                assert!(random_tree(n, seed).is_tree());
            }
        }
    }

    #[test]
    fn thirteen_trees() {
        assert_eq!(random_13_tree(0, 5), Graph::path(2));
        let claw = random_13_tree(1, 5);
        assert_eq!(
            tree_canonical_form(&claw),
            tree_canonical_form(&Graph::star(3))
        );
        for seed in 0..20 {
            assert!(is_13_tree(&random_13_tree(6, seed)));
        }
    }

    #[test]
    fn base_trees_validate() {
        for k in 2..=4 {
            for seed in 0..20 {
                let r = random_base_tree_2k1(k, 6, seed).unwrap();
                assert!(validate_base_tree(&r, k));
            }
        }
        assert!(random_base_tree_2k1(1, 4, 0).is_err());
    }

    #[test]
    fn free_tree_counts() {
        // Number of unlabelled trees on 1..=10 vertices.
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (n, &count) in (1..=10).zip(&expected) {
            assert_eq!(free_trees(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(
            tree_canonical_form(&a),
            tree_canonical_form(&Graph::star(3))
        );
    }
}
