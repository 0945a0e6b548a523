use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use factorsmith::formats::{parse_edge_list_labeled, parse_graph6, LabeledGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Graph6,
    Edgelist,
}

/// Reads a file, or stdin for `-` or no path.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
            Ok(text)
        }
    }
}

/// graph6 when the first line is a header or made only of graph6 bytes.
/// Edge-list lines always contain whitespace and digits sit below `?`.
fn looks_like_graph6(text: &str) -> bool {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    first.starts_with(">>graph6<<")
        || (!first.is_empty() && first.bytes().all(|b| (63..=126).contains(&b)))
}

/// Parses a single graph.
pub fn parse_one(text: &str, format: Format) -> Result<LabeledGraph> {
    let graph6 = match format {
        Format::Auto => looks_like_graph6(text),
        Format::Graph6 => true,
        Format::Edgelist => false,
    };
    if !graph6 {
        return Ok(parse_edge_list_labeled(text)?);
    }
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.len() != 1 {
        bail!("expected one graph6 line, found {}", lines.len());
    }
    let graph = parse_graph6(lines[0])?;
    let labels = (0..graph.order()).map(|v| v.to_string()).collect();
    Ok(LabeledGraph { graph, labels })
}

pub fn load(path: Option<&Path>, format: Format) -> Result<LabeledGraph> {
    parse_one(&read_text(path)?, format)
}
