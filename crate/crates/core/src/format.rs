//! Text formats for instances and covers.
//!
//! Instance: `#` comments, header `p sg <n> <m>`, then `m` lines
//! `e <u> <v> <+|->` with 1-indexed vertices.
//!
//! Cover: one member per line, edge ids `eK` 0-indexed in instance order,
//! vertices `vK` 1-indexed:
//! `balanced: e3 e7 e9`, `short: [e1] @v5 [e2]`, `long: [e1] (e4 e5) [e2]`.

use std::fmt::Write as _;

use crate::circuit::{Circuit, CircuitDiagnostic, CoverFamily, SignedCircuit};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| perr(line, format!("bad {what} '{tok}'")))
}

pub fn parse_instance(text: &str) -> Result<SignedGraph> {
    let mut g: Option<SignedGraph> = None;
    let mut declared = 0;
    let mut last = 0;
    for (line, l) in content_lines(text) {
        last = line;
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(perr(line, "second header"));
                }
                if toks.next() != Some("sg") {
                    return Err(perr(line, "header must read 'p sg <n> <m>'"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                declared = number(toks.next(), line, "edge count")?;
                g = Some(SignedGraph::new(n));
            }
            Some("e") => {
                let g = g.as_mut().ok_or_else(|| perr(line, "edge before header"))?;
                let n = g.vertex_count();
                let mut vertex = |what| -> Result<VertexId> {
                    let v = number(toks.next(), line, what)?;
                    if v == 0 || v > n {
                        return Err(perr(line, format!("vertex {v} outside 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (vertex("first endpoint")?, vertex("second endpoint")?);
                let sign = match toks.next() {
                    Some("+") => Sign::Positive,
                    Some("-") => Sign::Negative,
                    Some(t) => return Err(perr(line, format!("bad sign token '{t}'"))),
                    None => return Err(perr(line, "missing sign")),
                };
                g.add_edge(u, v, sign)?;
            }
            Some(t) => return Err(perr(line, format!("unknown line type '{t}'"))),
            None => unreachable!("blank lines are skipped"),
        }
        if toks_left(l) {
            return Err(perr(line, "trailing tokens"));
        }
    }
    let g = g.ok_or_else(|| perr(last.max(1), "missing header"))?;
    if g.edge_count() != declared {
        return Err(perr(last.max(1), format!("header declares {declared} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

fn toks_left(l: &str) -> bool {
    let toks: Vec<&str> = l.split_whitespace().collect();
    match toks.first() {
        Some(&"p") => toks.len() > 4,
        Some(&"e") => toks.len() > 4,
        _ => false,
    }
}

/// Canonical text: header, then edges in id order.
pub fn emit_instance(g: &SignedGraph) -> String {
    let mut out = format!("p sg {} {}\n", g.vertex_count(), g.edge_count());
    for ed in g.edges() {
        let s = if ed.sign.is_negative() { '-' } else { '+' };
        let _ = writeln!(out, "e {} {} {}", ed.u + 1, ed.v + 1, s);
    }
    out
}

/// Parsed cover: well-formed members plus per-line rejections of members
/// whose circuits could not be formed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedCover {
    pub family: CoverFamily,
    pub rejected: Vec<(usize, CircuitDiagnostic)>,
}

fn edge_list(s: &str, line: usize) -> Result<Vec<EdgeId>> {
    s.split_whitespace()
        .map(|t| {
            t.strip_prefix('e')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| perr(line, format!("bad edge token '{t}'")))
        })
        .collect()
}

/// Text between `open` and `close` at the start of `s`, and the rest.
fn group(s: &str, open: char, close: char, line: usize) -> Result<(&str, &str)> {
    let s = s.trim_start();
    let inner = s
        .strip_prefix(open)
        .ok_or_else(|| perr(line, format!("expected '{open}'")))?;
    let end = inner.find(close).ok_or_else(|| perr(line, format!("missing '{close}'")))?;
    Ok((&inner[..end], &inner[end + 1..]))
}

pub fn parse_cover(g: &SignedGraph, text: &str) -> Result<ParsedCover> {
    let mut members = Vec::new();
    let mut rejected = Vec::new();
    for (line, l) in content_lines(text) {
        let (kind, rest) = l.split_once(':').ok_or_else(|| perr(line, "expected '<kind>: ...'"))?;
        let circuit = |edges: &[EdgeId]| Circuit::from_edges(g, edges);
        let member: std::result::Result<SignedCircuit, CircuitDiagnostic> = match kind.trim() {
            "balanced" => {
                let edges = edge_list(rest, line)?;
                circuit(&edges).map(SignedCircuit::Balanced)
            }
            "short" => {
                let (a, rest) = group(rest, '[', ']', line)?;
                let rest = rest.trim_start();
                let rest = rest.strip_prefix("@v").ok_or_else(|| perr(line, "expected '@v<joint>'"))?;
                let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
                let joint: usize = rest[..end].parse().map_err(|_| perr(line, "bad joint vertex"))?;
                if joint == 0 || joint > g.vertex_count() {
                    return Err(perr(line, format!("joint vertex {joint} out of range")));
                }
                let (b, tail) = group(&rest[end..], '[', ']', line)?;
                if !tail.trim().is_empty() {
                    return Err(perr(line, "trailing text"));
                }
                let (a, b) = (edge_list(a, line)?, edge_list(b, line)?);
                circuit(&a).and_then(|c1| {
                    circuit(&b).map(|c2| SignedCircuit::ShortBarbell {
                        c1,
                        c2,
                        joint: joint - 1,
                    })
                })
            }
            "long" => {
                let (a, rest) = group(rest, '[', ']', line)?;
                let (p, rest) = group(rest, '(', ')', line)?;
                let (b, tail) = group(rest, '[', ']', line)?;
                if !tail.trim().is_empty() {
                    return Err(perr(line, "trailing text"));
                }
                let (a, path, b) = (edge_list(a, line)?, edge_list(p, line)?, edge_list(b, line)?);
                if let Some(&e) = path.iter().find(|&&e| e >= g.edge_count()) {
                    return Err(perr(line, format!("unknown edge e{e}")));
                }
                circuit(&a).and_then(|c1| circuit(&b).map(|c2| SignedCircuit::LongBarbell { c1, path, c2 }))
            }
            other => return Err(perr(line, format!("unknown member kind '{other}'"))),
        };
        match member {
            Ok(m) => members.push(m),
            Err(d) => rejected.push((line, d)),
        }
    }
    Ok(ParsedCover {
        family: CoverFamily::new(members),
        rejected,
    })
}

fn edges_text(edges: &[EdgeId]) -> String {
    edges.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join(" ")
}

pub fn emit_member(sc: &SignedCircuit) -> String {
    match sc {
        SignedCircuit::Balanced(c) => format!("balanced: {}", edges_text(c.edges())),
        SignedCircuit::ShortBarbell { c1, c2, joint } => format!(
            "short: [{}] @v{} [{}]",
            edges_text(c1.edges()),
            joint + 1,
            edges_text(c2.edges())
        ),
        SignedCircuit::LongBarbell { c1, path, c2 } => format!(
            "long: [{}] ({}) [{}]",
            edges_text(c1.edges()),
            edges_text(path),
            edges_text(c2.edges())
        ),
    }
}

pub fn emit_cover(f: &CoverFamily) -> String {
    f.members.iter().map(|m| emit_member(m) + "\n").collect()
}
