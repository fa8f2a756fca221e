//! The plain-text digraph format.
//!
//! ```text
//! # comments and blank lines are ignored
//! vertices 3
//! edge 0 1
//! edge 1 2
//! edge 2 2
//! ```
//!
//! The `vertices` line comes first; every later line is an `edge u v` with 0-based
//! vertex indices. Edge ids follow the order of the `edge` lines, and repeating
//! `edge u u` adds parallel loops.

use std::collections::HashSet;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |message: String| Error::Parse { line: line_no, message };
        let words: Vec<&str> = line.split_whitespace().collect();
        let number = |w: &str| w.parse::<usize>().map_err(|_| fail(format!("expected a non-negative integer, found `{w}`")));
        match (vertices, words.as_slice()) {
            (None, ["vertices", n]) => vertices = Some(number(n)?),
            (None, _) => return Err(fail("expected `vertices <N>` before any edge".into())),
            (Some(_), ["vertices", ..]) => return Err(fail("repeated `vertices` line".into())),
            (Some(n), ["edge", u, v]) => {
                let (u, v) = (number(u)?, number(v)?);
                if u >= n || v >= n {
                    return Err(fail(format!("vertex {} out of range for {n} vertices", u.max(v))));
                }
                if u != v && !seen.insert((u, v)) {
                    return Err(fail(format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
            (Some(_), _) => return Err(fail(format!("expected `edge <u> <v>`, found `{line}`"))),
        }
    }
    let n = vertices.ok_or(Error::Parse { line: 1, message: "missing `vertices <N>` line".into() })?;
    Digraph::new(n, edges)
}

pub fn serialize_digraph(g: &Digraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("edge {u} {v}\n"));
    }
    out
}
