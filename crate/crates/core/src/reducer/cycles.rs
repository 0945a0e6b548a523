//! Cycle structure of a factor via its blocks.
//!
//! Every cycle lies inside one block (2-connected component). A block that
//! is a single cycle contains no other cycle; a 2-connected block with more
//! edges than vertices contains a theta (a cycle plus an ear), and one of the
//! three cycles of a theta is always even.

use std::collections::VecDeque;

pub(crate) type Adjacency = [Vec<usize>];

/// Edge sets of the blocks that contain a cycle, as sorted vertex lists
/// plus the block's own adjacency. Blocks come in DFS discovery order from
/// the smallest vertex.
pub(crate) struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_cycle(&self) -> bool {
        self.edges.len() == self.vertices.len()
    }

    fn local_adjacency(&self, n: usize) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

struct Tarjan<'a> {
    adj: &'a Adjacency,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Block>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, u: usize, parent: usize) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for &v in &self.adj[u] {
            if v == parent {
                continue;
            }
            if self.disc[v] == 0 {
                self.stack.push((u, v));
                self.dfs(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut edges = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        edges.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    if edges.len() >= 3 {
                        let mut vertices: Vec<usize> =
                            edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        self.blocks.push(Block { vertices, edges });
                    }
                }
            } else if self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Blocks with at least one cycle.
pub(crate) fn cyclic_blocks(adj: &Adjacency) -> Vec<Block> {
    let n = adj.len();
    let mut t = Tarjan {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for s in 0..n {
        if t.disc[s] == 0 {
            t.dfs(s, usize::MAX);
        }
    }
    t.blocks
}

/// Vertex order around a cycle block: from its smallest vertex towards the
/// smaller of that vertex's two neighbours.
pub(crate) fn cycle_order(block: &Block, n: usize) -> Vec<usize> {
    let adj = block.local_adjacency(n);
    let start = block.vertices[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = adj[start][0];
    while cur != start {
        order.push(cur);
        let next = if adj[cur][0] != prev {
            adj[cur][0]
        } else {
            adj[cur][1]
        };
        prev = cur;
        cur = next;
    }
    order
}

/// Some cycle inside a 2-connected block, as a vertex sequence: the first
/// non-tree edge of a BFS tree closes it through the two tree paths.
fn some_cycle(adj: &Adjacency, root: usize) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if v != parent[u] {
                let (mut a, mut b) = (u, v);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("a 2-connected block with three or more edges has a cycle")
}

/// An even cycle in a block that is not itself a cycle.
fn even_cycle_in_theta(block: &Block, n: usize) -> Vec<usize> {
    let adj = block.local_adjacency(n);
    let cycle = some_cycle(&adj, block.vertices[0]);
    let len = cycle.len();
    if len.is_multiple_of(2) {
        return cycle;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &c) in cycle.iter().enumerate() {
        pos[c] = i;
    }
    let on_cycle_edge = |a: usize, b: usize| {
        let (i, j) = (pos[a], pos[b]);
        i != usize::MAX && j != usize::MAX && ((i + 1) % len == j || (j + 1) % len == i)
    };

    // An ear: a path leaving the cycle at p and returning at another vertex.
    let mut ear = None;
    'outer: for &p in &cycle {
        for &q in &adj[p] {
            if on_cycle_edge(p, q) {
                continue;
            }
            if pos[q] != usize::MAX {
                ear = Some(vec![p, q]);
                break 'outer;
            }
            // BFS from q avoiding p until the cycle is hit.
            let mut prev = vec![usize::MAX; n];
            prev[q] = q;
            prev[p] = p;
            let mut queue = VecDeque::from([q]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if prev[w] != usize::MAX {
                        continue;
                    }
                    prev[w] = u;
                    if pos[w] != usize::MAX {
                        let mut path = vec![w];
                        let mut x = u;
                        while x != q {
                            path.push(x);
                            x = prev[x];
                        }
                        path.push(q);
                        path.push(p);
                        path.reverse();
                        ear = Some(path);
                        break 'outer;
                    }
                    queue.push_back(w);
                }
            }
        }
    }
    let ear = ear.expect("a non-cycle 2-connected block has an ear");
    let (i, j) = (pos[ear[0]], pos[*ear.last().unwrap()]);
    let ear_len = ear.len() - 1;

    // Arc from cycle[i] forward to cycle[j], and the complementary arc.
    let forward: Vec<usize> = (0..)
        .map(|s| cycle[(i + s) % len])
        .take_while_inclusive(cycle[j]);
    let arc_len = forward.len() - 1;
    let arc = if (arc_len + ear_len).is_multiple_of(2) {
        forward
    } else {
        (0..)
            .map(|s| cycle[(i + len - s) % len])
            .take_while_inclusive(cycle[j])
    };
    // arc runs ear[0] .. ear[last]; close it along the ear backwards.
    let mut out = arc;
    out.extend(ear[1..ear.len() - 1].iter().rev());
    debug_assert_eq!(out.len() % 2, 0);
    out
}

trait TakeWhileInclusive: Iterator<Item = usize> + Sized {
    fn take_while_inclusive(self, last: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for x in self {
            out.push(x);
            if x == last {
                break;
            }
        }
        out
    }
}

impl<I: Iterator<Item = usize>> TakeWhileInclusive for I {}

/// The first even cycle found, if the graph has one.
pub(crate) fn find_even_cycle(adj: &Adjacency) -> Option<Vec<usize>> {
    let n = adj.len();
    for block in cyclic_blocks(adj) {
        if block.is_cycle() {
            if block.vertices.len() % 2 == 0 {
                return Some(cycle_order(&block, n));
            }
        } else {
            return Some(even_cycle_in_theta(&block, n));
        }
    }
    None
}
