//! DIMACS max-flow format: `p max n m`, `n id s`, `n id t`, `a u v cap`,
//! 1-based node ids, `c` comment lines.

use std::fmt::Write as _;
use std::path::Path;

use super::network::FlowInstance;
use crate::error::Result;
use crate::fmt::num;
use crate::textio::{read_file, Source};

pub fn parse_dimacs(label: &str, text: &str) -> Result<FlowInstance> {
    let src = Source::new(label, text, |l| l == "c" || l.starts_with("c ") || l.starts_with("c\t"));
    let mut lines = src.lines.iter();
    let head = lines.next().ok_or_else(|| src.eof("missing problem line \"p max n m\""))?;
    src.expect_len(head, 4, 4)?;
    if head.tokens[0].1 != "p" || head.tokens[1].1 != "max" {
        return Err(src.error(head.no, head.tokens[0].0, "expected \"p max n m\""));
    }
    let n: usize = src.field(head, 2, "node count")?;
    let m: usize = src.field(head, 3, "arc count")?;
    let mut source = None;
    let mut sink = None;
    let mut arcs = Vec::with_capacity(m);
    let node = |line: &crate::textio::Line<'_>, idx: usize| -> Result<usize> {
        let id: usize = src.field(line, idx, "node id")?;
        if id == 0 || id > n {
            return Err(src.error(line.no, line.tokens[idx].0, format!("node {id} outside 1..={n}")));
        }
        Ok(id - 1)
    };
    for line in lines {
        match line.tokens[0].1 {
            "n" => {
                src.expect_len(line, 3, 3)?;
                let id = node(line, 1)?;
                let slot = match line.tokens[2].1 {
                    "s" => &mut source,
                    "t" => &mut sink,
                    other => {
                        return Err(src.error(line.no, line.tokens[2].0, format!("terminal must be s or t, got {other:?}")))
                    }
                };
                if slot.replace(id).is_some() {
                    return Err(src.error(line.no, line.tokens[0].0, "terminal declared twice"));
                }
            }
            "a" => {
                src.expect_len(line, 4, 4)?;
                let u = node(line, 1)?;
                let v = node(line, 2)?;
                let cap: f64 = src.field(line, 3, "capacity")?;
                if cap < 0.0 || !cap.is_finite() {
                    return Err(src.error(line.no, line.tokens[3].0, format!("capacity must be finite and >= 0, got {cap}")));
                }
                arcs.push((line.no, u, v, cap));
            }
            other => {
                return Err(src.error(line.no, line.tokens[0].0, format!("unknown line type {other:?}")));
            }
        }
    }
    if arcs.len() != m {
        return Err(src.eof(format!("expected {m} arcs, found {}", arcs.len())));
    }
    let s = source.ok_or_else(|| src.eof("no source declared"))?;
    let t = sink.ok_or_else(|| src.eof("no sink declared"))?;
    let mut fi = FlowInstance::new(n, s, t).map_err(|e| src.error(head.no, 1, e.to_string()))?;
    for (no, u, v, cap) in arcs {
        fi.add_arc(u, v, cap).map_err(|e| src.error(no, 1, e.to_string()))?;
    }
    Ok(fi)
}

pub fn read_dimacs(path: &Path) -> Result<FlowInstance> {
    parse_dimacs(&path.display().to_string(), &read_file(path)?)
}

/// Infinite arcs are written at [`FlowInstance::infinite_value`].
pub fn write_dimacs(fi: &FlowInstance) -> String {
    let mut out = format!("p max {} {}\n", fi.nodes(), fi.arcs().len());
    let _ = writeln!(out, "n {} s", fi.source() + 1);
    let _ = writeln!(out, "n {} t", fi.sink() + 1);
    for (a, cap) in fi.arcs().iter().zip(fi.capacities()) {
        let _ = writeln!(out, "a {} {} {}", a.tail + 1, a.head + 1, num(cap));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    const DIAMOND: &str = "c diamond\np max 4 5\nn 1 s\nn 4 t\na 1 2 1\na 1 3 1\na 2 4 1\na 3 4 1\na 2 3 1\n";

    #[test]
    fn round_trip() {
        let fi = parse_dimacs("d", DIAMOND).unwrap();
        assert_eq!(fi.nodes(), 4);
        assert_eq!((fi.source(), fi.sink()), (0, 3));
        let text = write_dimacs(&fi);
        assert_eq!(text, DIAMOND.trim_start_matches("c diamond\n"));
        assert_eq!(parse_dimacs("d", &text).unwrap(), fi);
    }

    #[test]
    fn errors_carry_positions() {
        let bad = "p max 3 1\nn 1 s\nn 3 t\na 1 4 2\n";
        match parse_dimacs("x", bad).unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (4, 5)),
            e => panic!("{e}"),
        }
        assert!(parse_dimacs("x", "p max 3 2\nn 1 s\nn 3 t\na 1 2 1\n").is_err());
        assert!(parse_dimacs("x", "p max 3 1\nn 1 s\na 1 2 1\n").is_err());
        assert!(parse_dimacs("x", "p max 3 1\nn 1 s\nn 1 t\na 1 2 1\n").is_err());
        assert!(parse_dimacs("x", "p max 3 1\nn 1 s\nn 3 t\na 1 2 -1\n").is_err());
    }
}
