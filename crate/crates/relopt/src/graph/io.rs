//! Plain edge-list text format and DOT export.
//!
//! ```text
//! # optional comments
//! n m
//! u v        (m lines, 0-based, loops as `u u`)
//! ```

use super::Multigraph;
use crate::{Error, Result};
use std::fmt::Write as _;

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields.next().ok_or_else(|| err(format!("missing {what}")))?;
        tok.parse().map_err(|_| err(format!("`{tok}` is not a nonnegative integer")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if let Some(extra) = fields.next() {
        return Err(err(format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

/// Data lines of `text` with their 1-based line numbers, comments skipped.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses one graph block, returning it with the unconsumed data lines.
pub(crate) fn parse_graph_block<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Multigraph> {
    let (line, header) = lines.next().ok_or(Error::Parse { line: 0, message: "empty input".into() })?;
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let (line, text) = lines
            .next()
            .ok_or(Error::Parse { line: line + i + 1, message: format!("expected {m} edge lines, found {i}") })?;
        edges.push(parse_pair(line, text)?);
    }
    Multigraph::new(n, edges).map_err(|e| Error::Parse { line, message: e.to_string() })
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut lines = data_lines(text);
    let g = parse_graph_block(&mut lines)?;
    if let Some((line, extra)) = lines.next() {
        return Err(Error::Parse { line, message: format!("trailing data `{extra}`") });
    }
    Ok(g)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
