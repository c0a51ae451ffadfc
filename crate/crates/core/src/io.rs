//! Graph text formats.
//!
//! Canonical: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! DIMACS-like: a header `p edge n m`, then lines `e u v` with 1-based ids.
//! In both, `#` lines are comments; DIMACS also skips `c` lines. Blank lines
//! are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Canonical,
    Dimacs,
}

impl Format {
    /// Added to internal ids to get the labels used by the file.
    pub fn label_offset(self) -> usize {
        match self {
            Format::Canonical => 0,
            Format::Dimacs => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub format: Format,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let format = if header.starts_with('p') || header.starts_with('c') {
        Format::Dimacs
    } else {
        Format::Canonical
    };

    let mut pairs = Vec::new();
    let (n, m) = match format {
        Format::Canonical => {
            let mut toks = header.split_whitespace();
            let n = number(toks.next(), header_line, "vertex count")?;
            let m = number(toks.next(), header_line, "edge count")?;
            if toks.next().is_some() {
                return Err(parse_err(header_line, "header must be \"n m\""));
            }
            for (line, l) in lines {
                let mut toks = l.split_whitespace();
                let u = number(toks.next(), line, "vertex")?;
                let v = number(toks.next(), line, "vertex")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "edge line must be \"u v\""));
                }
                pairs.push((line, u, v));
            }
            (n, m)
        }
        Format::Dimacs => {
            let mut problem = None;
            for (line, l) in std::iter::once((header_line, header)).chain(lines) {
                let mut toks = l.split_whitespace();
                match toks.next() {
                    Some("c") => {}
                    Some("p") => {
                        if problem.is_some() {
                            return Err(parse_err(line, "duplicate problem line"));
                        }
                        if toks.next() != Some("edge") {
                            return Err(parse_err(line, "expected \"p edge n m\""));
                        }
                        let n = number(toks.next(), line, "vertex count")?;
                        let m = number(toks.next(), line, "edge count")?;
                        problem = Some((n, m));
                    }
                    Some("e") => {
                        if problem.is_none() {
                            return Err(parse_err(line, "edge before problem line"));
                        }
                        let u = number(toks.next(), line, "vertex")?;
                        let v = number(toks.next(), line, "vertex")?;
                        if u == 0 || v == 0 {
                            return Err(parse_err(line, "DIMACS vertex ids start at 1"));
                        }
                        pairs.push((line, u - 1, v - 1));
                    }
                    Some(other) => {
                        return Err(parse_err(line, format!("unknown line type {other:?}")))
                    }
                    None => {}
                }
            }
            problem.ok_or_else(|| parse_err(header_line, "missing problem line"))?
        }
    };

    if pairs.len() != m {
        return Err(parse_err(
            header_line,
            format!("header announces {m} edges but {} were listed", pairs.len()),
        ));
    }
    let offset = format.label_offset();
    for &(line, u, v) in &pairs {
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("vertex {} out of range", u.max(v) + offset),
            ));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {}", u + offset)));
        }
    }
    let edges: Vec<_> = pairs.iter().map(|&(_, u, v)| (u, v)).collect();
    let graph = Graph::from_edge_list(n, &edges).map_err(|e| parse_err(header_line, e.to_string()))?;
    Ok(ParsedGraph { graph, format })
}

pub fn read_graph(path: &Path) -> std::io::Result<Result<ParsedGraph>> {
    Ok(parse_graph(&std::fs::read_to_string(path)?))
}

pub fn to_canonical(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Canonical => to_canonical(g),
        Format::Dimacs => to_dimacs(g),
    }
}
