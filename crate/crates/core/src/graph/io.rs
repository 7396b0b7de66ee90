//! DIMACS `.col` and plain edge-list reading and writing.
//!
//! DIMACS files are 1-indexed (`p edge <n> <m>` then `e <u> <v>` lines, `c`
//! comments). Edge lists are 0-indexed: the first data line holds `<n>`, every
//! following line one `<u> <v>` pair, and `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dimacs,
    EdgeList,
}

impl Format {
    /// `.col` and `.dimacs` files are DIMACS, everything else an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col") | Some("dimacs") => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edge-list" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} `{tok}` is not a non-negative integer")))
}

/// Collects edges while checking range, loops and duplicates.
struct EdgeSink {
    graph: Graph,
    duplicates: usize,
}

impl EdgeSink {
    fn new(n: usize) -> Self {
        EdgeSink {
            graph: Graph::new(n),
            duplicates: 0,
        }
    }

    fn push(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        let n = self.graph.n();
        for x in [u, v] {
            if x >= n {
                return Err(parse_err(line, Error::VertexOutOfRange { vertex: x, n }.to_string()));
            }
        }
        if u == v {
            return Err(parse_err(line, Error::Loop(u).to_string()));
        }
        if self.graph.has_edge(u, v) {
            log::warn!("line {line}: duplicate edge {u} {v} ignored");
            self.duplicates += 1;
        } else {
            self.graph.add_edge(u, v);
        }
        Ok(())
    }
}

pub fn read_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Dimacs => read_dimacs(text),
        Format::EdgeList => read_edge_list(text),
    }
}

fn read_dimacs(text: &str) -> Result<Graph> {
    let mut sink: Option<EdgeSink> = None;
    let mut declared_m = 0;
    let mut edge_lines = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if sink.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("edges") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected `p edge <n> <m>`, found format {other:?}"),
                        ))
                    }
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                declared_m = parse_num(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after `p edge <n> <m>`"));
                }
                sink = Some(EdgeSink::new(n));
            }
            Some("e") => {
                let s = sink
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge line before the `p` line"))?;
                let u = parse_num(toks.next(), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices are numbered from 1"));
                }
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after edge"));
                }
                s.push(u - 1, v - 1, line)?;
                edge_lines += 1;
            }
            Some(tok) if tok.starts_with('c') => {}
            Some(tok) => return Err(parse_err(line, format!("unexpected line type `{tok}`"))),
        }
    }
    let sink = sink.ok_or_else(|| parse_err(0, "missing `p edge <n> <m>` line"))?;
    if edge_lines != declared_m {
        log::warn!("header declares {declared_m} edges, file lists {edge_lines}");
    }
    Ok(sink.graph)
}

fn read_edge_list(text: &str) -> Result<Graph> {
    let mut sink: Option<EdgeSink> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let data = raw.split('#').next().unwrap_or("");
        let mut toks = data.split_whitespace();
        let Some(first) = toks.next() else { continue };
        match sink.as_mut() {
            None => {
                let n = parse_num(Some(first), line, "vertex count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "first line must hold only the vertex count"));
                }
                sink = Some(EdgeSink::new(n));
            }
            Some(s) => {
                let u = parse_num(Some(first), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "expected exactly two endpoints"));
                }
                s.push(u, v, line)?;
            }
        }
    }
    sink.map(|s| s.graph)
        .ok_or_else(|| parse_err(0, "missing vertex count"))
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    let edges = g.edges();
    match format {
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), edges.len()).unwrap();
            for (u, v) in edges {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        Format::EdgeList => {
            writeln!(out, "{}", g.n()).unwrap();
            for (u, v) in edges {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out
}

pub fn read_graph_file(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| parse_err(0, format!("cannot read {}: {e}", path.display())))?;
    read_graph(&text, format.unwrap_or_else(|| Format::from_path(path)))
}
