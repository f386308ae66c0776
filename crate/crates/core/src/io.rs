//! Text formats: edge lists, a JSON object form, and DOT export.
//!
//! Edge list: the first non-comment line holds the vertex count `n`; every
//! following line holds one pair `u v`. `#` starts a comment anywhere on a line.
//!
//! JSON: `{"n": 3, "edges": [[0,1],[1,2]], "labels": {"0": "a"}}` (labels
//! optional).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Graph, MultiGraph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses the edge-list header and pairs, returning `(n, pairs)` with the line
/// number of each pair.
fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize, usize)>)> {
    let mut n = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("expected a vertex id, found {s:?}")))
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(num(count)?),
            (None, _) => return Err(parse_err(lineno, "expected the vertex count on its own line")),
            (Some(count), [u, v]) => {
                let (u, v) = (num(u)?, num(v)?);
                if u >= count || v >= count {
                    return Err(parse_err(lineno, format!("edge {u} {v} outside 0..{count}")));
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop on {u}")));
                }
                pairs.push((u, v, lineno));
            }
            (Some(_), _) => return Err(parse_err(lineno, format!("expected \"u v\", found {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing vertex count"))?;
    Ok((n, pairs))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, pairs) = parse_pairs(text)?;
    let mut g = Graph::new(n);
    for (u, v, line) in pairs {
        if !g.add_edge(u, v)? {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
    }
    Ok(g)
}

/// Edge list where repeated pairs are parallel edges (all tagged original).
pub fn parse_multigraph_edge_list(text: &str) -> Result<MultiGraph> {
    let (n, pairs) = parse_pairs(text)?;
    let mut m = MultiGraph::new(n);
    for (u, v, _) in pairs {
        m.add_edge(u, v, EdgeKind::Original)?;
    }
    Ok(m)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn emit_multigraph_edge_list(m: &MultiGraph) -> String {
    let mut out = format!("{}\n", m.n);
    for &(u, v, kind) in &m.edges {
        match kind {
            EdgeKind::Original => {
                let _ = writeln!(out, "{u} {v}");
            }
            EdgeKind::Virtual => {
                let _ = writeln!(out, "{u} {v} # virtual");
            }
        }
    }
    out
}

pub fn parse_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
}

pub fn emit_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialises")
}

/// Accepts either format: JSON when the first non-blank character is `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn emit_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", dot_id(name));
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label={}];", dot_id(&g.name(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
