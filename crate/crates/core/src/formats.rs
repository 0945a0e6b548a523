//! graph6 (short form), plain edge lists and DOT output.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reducer::{Color, ColoredFactor};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn g6_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        pos,
        msg: msg.into(),
    }
}

/// Decodes one graph6 line (short form, `n <= 62`).
///
/// The optional `>>graph6<<` header is accepted. Trailing whitespace is
/// ignored; any other deviation is reported with its byte offset.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (offset, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let Some(&first) = body.first() else {
        return Err(g6_err(offset, "empty input"));
    };
    match first {
        b':' => return Err(g6_err(offset, "sparse6 is not supported")),
        b'&' => return Err(g6_err(offset, "digraph6 is not supported")),
        126 => return Err(g6_err(offset, "long-form header (n > 62) is not supported")),
        63..=125 => {}
        _ => {
            return Err(g6_err(
                offset,
                format!("malformed header byte 0x{first:02x}"),
            ))
        }
    }
    let n = (first - BIAS) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let groups = bits.div_ceil(6);
    let data = &body[1..];
    if let Some((i, &b)) = data
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(g6_err(
            offset + 1 + i,
            format!("character 0x{b:02x} outside the graph6 range"),
        ));
    }
    if data.len() < groups {
        return Err(g6_err(
            offset + 1 + data.len(),
            format!(
                "truncated bit section: expected {groups} bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > groups {
        return Err(g6_err(
            offset + 1 + groups,
            "trailing bytes after the bit section",
        ));
    }

    let bit = |k: usize| (data[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in bits..groups * 6 {
        if bit(pad) {
            return Err(g6_err(offset + 1 + pad / 6, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 line without the optional header.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + bits.div_ceil(6));
    out.push((n as u8 + BIAS) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    Ok(out)
}

/// An edge list together with the original label of every dense vertex id.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

/// Parses whitespace-separated `u v` pairs, one per line.
///
/// An optional first line `n <count>` fixes the order and keeps isolated
/// vertices; ids must then be integers below `count`. Without it, integer
/// labels map to themselves (order = largest id + 1) and any other labels
/// are renumbered in order of first appearance. `#` starts a comment.
pub fn parse_edge_list_labeled(text: &str) -> Result<LabeledGraph> {
    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(usize, &str, &str)> = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(
                lineno,
                format!("expected two tokens, found {}", tokens.len()),
            ));
        }
        if !seen_content && tokens[0] == "n" {
            let count = tokens[1]
                .parse()
                .map_err(|_| err(lineno, format!("bad vertex count {:?}", tokens[1])))?;
            declared = Some(count);
            seen_content = true;
            continue;
        }
        seen_content = true;
        pairs.push((lineno, tokens[0], tokens[1]));
    }

    let numeric = pairs
        .iter()
        .all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
    let mut edges = Vec::with_capacity(pairs.len());
    let labels;
    if let Some(n) = declared {
        for &(lineno, a, b) in &pairs {
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| err(lineno, format!("vertex {t:?} is not an integer id")))
            };
            let (u, v) = (parse(a)?, parse(b)?);
            if u == v {
                return Err(err(lineno, format!("self-loop at {u}")));
            }
            if let Some(w) = [u, v].into_iter().find(|&w| w >= n) {
                return Err(err(lineno, format!("vertex {w} is not below n = {n}")));
            }
            edges.push((u, v));
        }
        labels = (0..n).map(|v| v.to_string()).collect();
    } else if numeric {
        let mut n = 0;
        for &(lineno, a, b) in &pairs {
            let (u, v): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
            if u == v {
                return Err(err(lineno, format!("self-loop at {u}")));
            }
            n = n.max(u + 1).max(v + 1);
            edges.push((u, v));
        }
        labels = (0..n).map(|v| v.to_string()).collect();
    } else {
        let mut names: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        for &(lineno, a, b) in &pairs {
            if a == b {
                return Err(err(lineno, format!("self-loop at {a}")));
            }
            let mut id = |t: &str| {
                *index.entry(t.to_string()).or_insert_with(|| {
                    names.push(t.to_string());
                    names.len() - 1
                })
            };
            let (u, v) = (id(a), id(b));
            edges.push((u, v));
        }
        labels = names;
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

/// [`parse_edge_list_labeled`] without the label table.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_labeled(text).map(|l| l.graph)
}

/// Writes `g` as `n <count>` followed by one `u v` line per edge.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Renders `g` as an undirected DOT graph.
///
/// With a highlight, factor edges are drawn red (h = 1) or blue (h = 1/2)
/// and the remaining edges dashed gray.
pub fn to_dot(g: &Graph, highlight: Option<&ColoredFactor>) -> Result<String> {
    if let Some(f) = highlight {
        if let Some((u, v)) = f.edges().map(|(e, _)| e).find(|&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::NotAnEdge { u, v });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        let style = match highlight {
            None => "",
            Some(f) => match f.color(u, v) {
                Some(Color::Red) => " [color=red, penwidth=2]",
                Some(Color::Blue) => " [color=blue]",
                None => " [style=dashed, color=gray]",
            },
        };
        let _ = writeln!(out, "  {u} -- {v}{style};");
    }
    out.push_str("}\n");
    Ok(out)
}
