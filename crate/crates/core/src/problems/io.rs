//! Readers and writers for the graph input formats.
//!
//! Writers normalize whitespace and drop comments; apart from that,
//! parse-then-write reproduces the input and write-then-parse is lossless.

use std::fmt::Write as _;
use std::path::Path;

use super::graph::{AnchorSet, MembershipInstance, UndirectedGraph, WeightedBipartiteGraph};
use crate::error::Result;
use crate::fmt::num;
use crate::textio::{read_file, Source};

/// Edge list: `n m`, then `m` lines `u v [w]` (0-based).
pub fn parse_edge_list(label: &str, text: &str) -> Result<UndirectedGraph> {
    let src = Source::new(label, text, |_| false);
    let mut lines = src.lines.iter();
    let head = lines.next().ok_or_else(|| src.eof("missing header \"n m\""))?;
    src.expect_len(head, 2, 2)?;
    let n: usize = src.field(head, 0, "vertex count")?;
    let m: usize = src.field(head, 1, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut weighted = false;
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| src.eof(format!("expected {m} edges, found {}", edges.len())))?;
        src.expect_len(line, 2, 3)?;
        let u: usize = src.field(line, 0, "vertex")?;
        let v: usize = src.field(line, 1, "vertex")?;
        let w: f64 = if line.tokens.len() == 3 {
            weighted = true;
            src.field(line, 2, "weight")?
        } else {
            1.0
        };
        for (k, x) in [(0, u), (1, v)] {
            if x >= n {
                return Err(src.error(line.no, line.tokens[k].0, format!("vertex {x} out of range 0..{n}")));
            }
        }
        if u == v {
            return Err(src.error(line.no, line.tokens[0].0, format!("self-loop at vertex {u}")));
        }
        if w < 0.0 || !w.is_finite() {
            return Err(src.error(line.no, line.tokens[2].0, format!("weight must be finite and >= 0, got {w}")));
        }
        edges.push((u, v, w));
    }
    if let Some(extra) = lines.next() {
        return Err(src.error(extra.no, extra.tokens[0].0, format!("more than {m} edge lines")));
    }
    if n == 0 {
        return Err(src.error(head.no, head.tokens[0].0, "graph must have at least one vertex"));
    }
    UndirectedGraph::build(n, edges, weighted)
}

pub fn read_edge_list(path: &Path) -> Result<UndirectedGraph> {
    parse_edge_list(&path.display().to_string(), &read_file(path)?)
}

pub fn write_edge_list(g: &UndirectedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v, w) in g.edges() {
        if g.is_weighted() {
            let _ = writeln!(out, "{u} {v} {}", num(w));
        } else {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

/// Bipartite: `|L| |R| m`, then `|R|` lines `v w(v)`, then `m` lines `u v`
/// with `u ∈ L`, `v ∈ R`.
pub fn parse_bipartite(label: &str, text: &str) -> Result<WeightedBipartiteGraph> {
    let src = Source::new(label, text, |_| false);
    let mut lines = src.lines.iter();
    let head = lines
        .next()
        .ok_or_else(|| src.eof("missing header \"|L| |R| m\""))?;
    src.expect_len(head, 3, 3)?;
    let left: usize = src.field(head, 0, "left count")?;
    let right: usize = src.field(head, 1, "right count")?;
    let m: usize = src.field(head, 2, "edge count")?;
    if left == 0 {
        return Err(src.error(head.no, head.tokens[0].0, "left side must be nonempty"));
    }
    let mut weights = vec![f64::NAN; right];
    for i in 0..right {
        let line = lines
            .next()
            .ok_or_else(|| src.eof(format!("expected {right} weight lines, found {i}")))?;
        src.expect_len(line, 2, 2)?;
        let v: usize = src.field(line, 0, "right vertex")?;
        let w: f64 = src.field(line, 1, "weight")?;
        if v >= right {
            return Err(src.error(line.no, line.tokens[0].0, format!("right vertex {v} out of range 0..{right}")));
        }
        if !weights[v].is_nan() {
            return Err(src.error(line.no, line.tokens[0].0, format!("weight of right vertex {v} given twice")));
        }
        if w < 0.0 || !w.is_finite() {
            return Err(src.error(line.no, line.tokens[1].0, format!("weight must be finite and >= 0, got {w}")));
        }
        weights[v] = w;
    }
    let mut edges = Vec::with_capacity(m);
    let mut rdeg = vec![0usize; right];
    let mut seen = std::collections::HashSet::with_capacity(m);
    for i in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| src.eof(format!("expected {m} edges, found {i}")))?;
        src.expect_len(line, 2, 2)?;
        let u: usize = src.field(line, 0, "left vertex")?;
        let v: usize = src.field(line, 1, "right vertex")?;
        if u >= left {
            return Err(src.error(line.no, line.tokens[0].0, format!("left vertex {u} out of range 0..{left}")));
        }
        if v >= right {
            return Err(src.error(line.no, line.tokens[1].0, format!("right vertex {v} out of range 0..{right}")));
        }
        if !seen.insert((u, v)) {
            return Err(src.error(line.no, line.tokens[0].0, format!("duplicate edge ({u}, {v})")));
        }
        rdeg[v] += 1;
        edges.push((u, v));
    }
    if let Some(extra) = lines.next() {
        return Err(src.error(extra.no, extra.tokens[0].0, format!("more than {m} edge lines")));
    }
    if let Some(v) = rdeg.iter().position(|&d| d == 0) {
        return Err(src.eof(format!("right vertex {v} has no neighbours")));
    }
    WeightedBipartiteGraph::new(left, weights, edges)
}

pub fn read_bipartite(path: &Path) -> Result<WeightedBipartiteGraph> {
    parse_bipartite(&path.display().to_string(), &read_file(path)?)
}

pub fn write_bipartite(b: &WeightedBipartiteGraph) -> String {
    let mut out = format!("{} {} {}\n", b.left(), b.right(), b.m());
    for v in 0..b.right() {
        let _ = writeln!(out, "{v} {}", num(b.weight(v)));
    }
    for &(u, v) in b.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// One real per line.
pub fn parse_vector(label: &str, text: &str, expected: Option<usize>) -> Result<Vec<f64>> {
    let src = Source::new(label, text, |_| false);
    let mut out = Vec::with_capacity(src.lines.len());
    for line in &src.lines {
        src.expect_len(line, 1, 1)?;
        let x: f64 = src.field(line, 0, "real")?;
        if !x.is_finite() {
            return Err(src.error(line.no, line.tokens[0].0, "entries must be finite"));
        }
        out.push(x);
    }
    if let Some(n) = expected {
        if out.len() != n {
            return Err(src.eof(format!("expected {n} entries, found {}", out.len())));
        }
    }
    Ok(out)
}

pub fn read_vector(path: &Path, expected: Option<usize>) -> Result<Vec<f64>> {
    parse_vector(&path.display().to_string(), &read_file(path)?, expected)
}

pub fn write_vector(y: &[f64]) -> String {
    y.iter().map(|&v| num(v) + "\n").collect()
}

/// Anchor file: whitespace-separated vertex ids.
pub fn parse_anchors(label: &str, text: &str, n: usize) -> Result<AnchorSet> {
    let src = Source::new(label, text, |_| false);
    let mut ids = Vec::new();
    for line in &src.lines {
        for (k, &(col, _)) in line.tokens.iter().enumerate() {
            let v: usize = src.field(line, k, "vertex")?;
            if v >= n {
                return Err(src.error(line.no, col, format!("vertex {v} out of range 0..{n}")));
            }
            ids.push(v);
        }
    }
    AnchorSet::new(n, &ids)
}

pub fn read_anchors(path: &Path, n: usize) -> Result<AnchorSet> {
    parse_anchors(&path.display().to_string(), &read_file(path)?, n)
}

pub fn read_membership(graph: &Path, y: &Path) -> Result<MembershipInstance> {
    let g = read_edge_list(graph)?;
    let y = read_vector(y, Some(g.n()))?;
    MembershipInstance::new(g, y)
}
