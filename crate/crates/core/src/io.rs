//! Plain-text interchange format.
//!
//! Graph files: a header line `n m N`, then `m` lines `tail head length`,
//! 0-based decimal ids, LF-terminated. Edge-set files (hopsets, shortcuts)
//! are bare `tail head length` lines.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge, WeightedEdgeSet};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn ints<const K: usize>(line: &str, lineno: usize) -> Result<[u64; K]> {
    let mut out = [0u64; K];
    let mut it = line.split_ascii_whitespace();
    for slot in out.iter_mut() {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(lineno, format!("expected {K} integers")))?;
        *slot = tok
            .parse()
            .map_err(|_| parse_err(lineno, format!("not a nonnegative integer: {tok:?}")))?;
    }
    if it.next().is_some() {
        return Err(parse_err(lineno, format!("expected exactly {K} integers")));
    }
    Ok(out)
}

/// Reads a graph file. The header is validated before any edge is read.
pub fn read_graph(r: impl BufRead) -> Result<DiGraph> {
    let mut lines = r.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((i, l)) => {
                let l = l?;
                if !l.trim().is_empty() {
                    break (i + 1, l);
                }
            }
            None => return Err(parse_err(1, "missing header `n m N`")),
        }
    };
    let [n, m, bound] = ints::<3>(&header.1, header.0)?;
    if bound == 0 {
        return Err(parse_err(header.0, "N must be at least 1"));
    }
    let (n, m) = (n as usize, m as usize);
    let mut edges = Vec::with_capacity(m);
    for (i, l) in lines {
        let l = l?;
        if l.trim().is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(parse_err(
                i + 1,
                format!("more than the {m} edges declared"),
            ));
        }
        let [t, h, len] = ints::<3>(&l, i + 1)?;
        edges.push(Edge::new(t as usize, h as usize, len));
    }
    if edges.len() != m {
        return Err(parse_err(
            header.0,
            format!("header declares {m} edges, file has {}", edges.len()),
        ));
    }
    DiGraph::with_bound(n, edges, bound)
}

pub fn parse_graph(text: &str) -> Result<DiGraph> {
    read_graph(text.as_bytes())
}

pub fn format_graph(g: &DiGraph) -> String {
    let mut s = String::with_capacity(16 * (g.m() + 1));
    let _ = writeln!(s, "{} {} {}", g.n(), g.m(), g.max_length_bound());
    for e in g.edges() {
        let _ = writeln!(s, "{} {} {}", e.tail, e.head, e.len);
    }
    s
}

pub fn write_graph(mut w: impl Write, g: &DiGraph) -> Result<()> {
    w.write_all(format_graph(g).as_bytes())?;
    Ok(())
}

pub fn format_edge_set(h: &WeightedEdgeSet) -> String {
    let mut s = String::with_capacity(16 * h.len());
    for e in h.iter() {
        let _ = writeln!(s, "{} {} {}", e.tail, e.head, e.len);
    }
    s
}

/// Reads `tail head length` lines; a missing length defaults to 1 so bare
/// shortcut files (`tail head`) are accepted too.
pub fn read_edge_set(r: impl BufRead) -> Result<WeightedEdgeSet> {
    let mut out = WeightedEdgeSet::new();
    for (i, l) in r.lines().enumerate() {
        let l = l?;
        let toks = l.split_ascii_whitespace().count();
        let e = match toks {
            0 => continue,
            2 => {
                let [t, h] = ints::<2>(&l, i + 1)?;
                Edge::new(t as usize, h as usize, 1)
            }
            _ => {
                let [t, h, len] = ints::<3>(&l, i + 1)?;
                if len == 0 {
                    return Err(parse_err(i + 1, "edge length must be positive"));
                }
                Edge::new(t as usize, h as usize, len)
            }
        };
        out.insert_edge(e);
    }
    Ok(out)
}
