//! Edge-list files: one `u v` pair per line, `#` starts a comment.
//!
//! A graph with isolated vertices is saved with a leading `# n=<count>`
//! line, which the loader honours, so every graph round-trips.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn load_graph(path: impl AsRef<Path>, remap: bool) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text, remap)
}

pub fn parse_edge_list(text: &str, remap: bool) -> Result<Graph> {
    let mut declared_n = None;
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("n=") {
                declared_n = Some(n.trim().parse::<usize>().map_err(|e| Error::Parse {
                    line: i + 1,
                    msg: format!("bad vertex count: {e}"),
                })?);
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = parts.next().ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: "expected two vertex ids".into(),
            })?;
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: i + 1,
                msg: format!("bad vertex id {tok:?}: {e}"),
            })
        };
        let (a, b) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: i + 1,
                msg: "trailing tokens".into(),
            });
        }
        raw.push((a, b));
    }

    if remap {
        let mut ids = BTreeMap::new();
        for &(a, b) in &raw {
            ids.insert(a, 0);
            ids.insert(b, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i;
        }
        let edges: Vec<_> = raw.iter().map(|(a, b)| (ids[a], ids[b])).collect();
        return Graph::from_edges(ids.len(), &edges);
    }

    let max_id = raw.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < max_id => {
            return Err(Error::Ids(format!(
                "id {} exceeds declared n={n}",
                max_id - 1
            )))
        }
        Some(n) => n,
        None => {
            let mut seen = vec![false; max_id];
            for &(a, b) in &raw {
                seen[a] = true;
                seen[b] = true;
            }
            if let Some(gap) = seen.iter().position(|s| !s) {
                return Err(Error::Ids(format!(
                    "vertex {gap} never appears (ids not contiguous)"
                )));
            }
            max_id
        }
    };
    Graph::from_edges(n, &raw)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        writeln!(out, "# n={}", g.n()).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

pub fn save_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_edge_list(g))?;
    Ok(())
}
