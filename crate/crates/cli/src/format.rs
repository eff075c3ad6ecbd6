//! Graph documents: DOT, edge list and JSON.
//!
//! All three list arcs sorted by `(source, target)` with bare 0-based ids.
//! DOT adds a node statement for every vertex without arcs so the order
//! survives a round trip. Parsers return a [`RawGraph`], which keeps
//! doubled pairs and self-loops around for diagnostics; [`RawGraph::build`]
//! rejects them.

use std::fmt::Write as _;

use imbalance_core::Digraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Dot,
    Edgelist,
    Json,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("malformed JSON document: {0}")]
    Json(String),
    #[error("document says {field} is {stated:?} but the arcs give {actual:?}")]
    Inconsistent {
        field: &'static str,
        stated: Vec<i64>,
        actual: Vec<i64>,
    },
    #[error("arc ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },
    #[error("arc ({u}, {v}) names a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("pair {{{u}, {v}}} is joined more than once")]
    DoubledPair { u: usize, v: usize },
    #[error("could not recognise the graph format")]
    Unrecognised,
}

/// Order and arc list as read from a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGraph {
    pub order: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl RawGraph {
    pub fn build(&self) -> Result<Digraph, FormatError> {
        let n = self.order;
        let mut g = Digraph::new(n);
        for &(u, v) in &self.arcs {
            if u >= n || v >= n {
                return Err(FormatError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(FormatError::SelfLoop { u, v });
            }
            if g.is_joined(u, v) {
                return Err(FormatError::DoubledPair {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.add_arc(u, v).expect("checked above");
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonDocument {
    n: usize,
    arcs: Vec<[usize; 2]>,
    imbalance_sequence: Vec<i64>,
    imbalance_set: Vec<i64>,
}

pub fn emit(g: &Digraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(g),
        GraphFormat::Edgelist => to_edgelist(g),
        GraphFormat::Json => to_json(g),
    }
}

pub fn parse(text: &str, format: GraphFormat) -> Result<RawGraph, FormatError> {
    match format {
        GraphFormat::Dot => parse_dot(text),
        GraphFormat::Edgelist => parse_edgelist(text),
        GraphFormat::Json => parse_json(text),
    }
}

/// Guess the format from the first non-blank character(s).
pub fn detect(text: &str) -> Result<GraphFormat, FormatError> {
    let head = text.trim_start();
    if head.starts_with("digraph") {
        Ok(GraphFormat::Dot)
    } else if head.starts_with('#') {
        Ok(GraphFormat::Edgelist)
    } else if head.starts_with('{') {
        Ok(GraphFormat::Json)
    } else {
        Err(FormatError::Unrecognised)
    }
}

pub fn to_dot(g: &Digraph) -> String {
    let mut s = String::from("digraph {\n");
    for v in 0..g.order() {
        if g.out_degree(v) + g.in_degree(v) == 0 {
            writeln!(s, "  {v};").unwrap();
        }
    }
    for (u, v) in g.arcs() {
        writeln!(s, "  {u} -> {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<usize, FormatError> {
    tok.trim()
        .parse()
        .map_err(|_| syntax(line, format!("`{}` is not a vertex id", tok.trim())))
}

pub fn parse_dot(text: &str) -> Result<RawGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "digraph {")) => {}
        Some((i, _)) => return Err(syntax(i, "expected `digraph {`")),
        None => return Err(syntax(1, "empty document")),
    }
    let mut order = 0;
    let mut arcs = Vec::new();
    let mut closed = false;
    for (i, line) in lines {
        if closed {
            return Err(syntax(i, "content after closing brace"));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| syntax(i, "missing `;`"))?;
        match body.split_once("->") {
            Some((u, v)) => {
                let (u, v) = (parse_id(u, i)?, parse_id(v, i)?);
                order = order.max(u + 1).max(v + 1);
                arcs.push((u, v));
            }
            None => order = order.max(parse_id(body, i)? + 1),
        }
    }
    if !closed {
        return Err(syntax(text.lines().count().max(1), "missing `}`"));
    }
    Ok(RawGraph { order, arcs })
}

pub fn to_edgelist(g: &Digraph) -> String {
    let mut s = format!("# tournament n={}\n", g.order());
    for (u, v) in g.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_edgelist(text: &str) -> Result<RawGraph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let order = match lines.next() {
        Some((i, header)) => header
            .strip_prefix("# tournament n=")
            .ok_or_else(|| syntax(i, "expected `# tournament n=<n>`"))
            .and_then(|n| parse_id(n, i))?,
        None => return Err(syntax(1, "empty document")),
    };
    let mut arcs = Vec::new();
    for (i, line) in lines.filter(|(_, l)| !l.is_empty()) {
        let mut toks = line.split_whitespace();
        match (toks.next(), toks.next(), toks.next()) {
            (Some(u), Some(v), None) => arcs.push((parse_id(u, i)?, parse_id(v, i)?)),
            _ => return Err(syntax(i, "expected `u v`")),
        }
    }
    Ok(RawGraph { order, arcs })
}

pub fn to_json(g: &Digraph) -> String {
    let doc = JsonDocument {
        n: g.order(),
        arcs: g.arcs().map(|(u, v)| [u, v]).collect(),
        imbalance_sequence: g.imbalance_sequence().into_vec(),
        imbalance_set: g.imbalance_set().members(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// The stated imbalance fields must agree with the arcs.
pub fn parse_json(text: &str) -> Result<RawGraph, FormatError> {
    let doc: JsonDocument =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let raw = RawGraph {
        order: doc.n,
        arcs: doc.arcs.iter().map(|&[u, v]| (u, v)).collect(),
    };
    let g = raw.build()?;
    let sequence = g.imbalance_sequence().into_vec();
    if doc.imbalance_sequence != sequence {
        return Err(FormatError::Inconsistent {
            field: "imbalance_sequence",
            stated: doc.imbalance_sequence,
            actual: sequence,
        });
    }
    let set = g.imbalance_set().members();
    if doc.imbalance_set != set {
        return Err(FormatError::Inconsistent {
            field: "imbalance_set",
            stated: doc.imbalance_set,
            actual: set,
        });
    }
    Ok(raw)
}
