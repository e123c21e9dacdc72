//! Interchange formats: graph6, a plain edge list, DOT, and JSON reports.

mod graph6;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) use graph6::in_line as graph6_in_line;
pub use graph6::{graph6_decode, graph6_encode, read_graph6, GRAPH6_MAX_ORDER};

/// Edge-list text: a header line `n m`, then `m` lines `u v` (0-indexed).
pub fn edges_export(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        fields
            .next()
            .ok_or_else(|| Error::Parse {
                line: lineno,
                reason: "expected two integers".into(),
            })?
            .parse()
            .map_err(|e| Error::Parse {
                line: lineno,
                reason: format!("{e}"),
            })
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            reason: "expected two integers".into(),
        });
    }
    Ok(pair)
}

/// Inverse of [`edges_export`]. Blank lines and `#` comments are skipped.
pub fn edges_import(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header, hline)?;
    let edges = lines
        .map(|(i, l)| parse_pair(l, i))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

/// Reads a single graph from text, choosing the format by its first
/// meaningful line: two integers mean an edge list, anything else graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(Error::Parse {
            line: 1,
            reason: "no graph in input".into(),
        })?;
    let looks_numeric = first
        .split_whitespace()
        .all(|f| f.bytes().all(|b| b.is_ascii_digit()));
    if looks_numeric && first.split_whitespace().count() == 2 {
        edges_import(text)
    } else {
        graph6_decode(first)
    }
}

/// Undirected DOT. Highlighted vertices are filled; everything is emitted
/// in label order.
pub fn dot_export(g: &Graph, highlight: Option<&[usize]>) -> String {
    let marked = |v: usize| highlight.is_some_and(|h| h.contains(&v));
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        if marked(v) {
            writeln!(out, "  {v} [style=filled, fillcolor=lightblue];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Pretty JSON with fields in declaration order.
pub fn report_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize infallibly")
}
