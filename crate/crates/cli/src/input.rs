use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use fflab_core::io::{parse_edge_list, parse_graph6, parse_graph6_stream};
use fflab_core::{Graph, Strategy, StrategyJson};

use crate::{GraphFormat, GraphInput};

pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Edge lists start with a node count; anything else is taken as graph6.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_none_or(|l| l.split_whitespace().all(|t| t.parse::<usize>().is_ok()))
}

pub fn load_graph(input: &GraphInput) -> Result<Graph> {
    let text = read_text(&input.graph)?;
    let edges = match input.format {
        GraphFormat::Edges => true,
        GraphFormat::Graph6 => false,
        GraphFormat::Auto => looks_like_edge_list(&text),
    };
    if edges {
        return parse_edge_list(&text).with_context(|| format!("parsing {}", input.graph.display()));
    }
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let first = lines.next().context("empty graph6 input")?;
    if lines.next().is_some() {
        bail!("expected a single graph6 line in {}", input.graph.display());
    }
    parse_graph6(first).with_context(|| format!("parsing {}", input.graph.display()))
}

pub fn load_stream(path: &Path) -> Result<Vec<Graph>> {
    let text = read_text(path)?;
    parse_graph6_stream(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn load_strategy(path: &Path, n: usize) -> Result<Strategy> {
    let text = read_text(path)?;
    let json: StrategyJson =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    json.into_strategy(n)
        .with_context(|| format!("invalid strategy in {}", path.display()))
}

pub fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = read_text(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
