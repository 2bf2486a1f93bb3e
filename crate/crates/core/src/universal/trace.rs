use std::io::Write;

use crate::fmt::num;

#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub iter: usize,
    pub elapsed_s: f64,
    pub best_obj: f64,
    /// Empty for solvers without a continuous iterate.
    pub norm_sq: Option<f64>,
    pub gap: Option<f64>,
    pub set_size: usize,
}

/// Per-iteration progress of a solver.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConvergenceTrace {
    pub records: Vec<TraceRecord>,
}

pub const TRACE_HEADER: &str = "iter,elapsed_s,best_obj,norm_sq,gap,set_size";

impl ConvergenceTrace {
    pub fn push(&mut self, r: TraceRecord) {
        if let Some(last) = self.records.last() {
            debug_assert!(r.iter > last.iter);
            debug_assert!(r.elapsed_s >= last.elapsed_s);
        }
        self.records.push(r);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&TraceRecord> {
        self.records.last()
    }

    /// Best gap among evaluated iterations.
    pub fn best_gap(&self) -> Option<f64> {
        self.records.iter().filter_map(|r| r.gap).reduce(f64::min)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{TRACE_HEADER}")?;
        for r in &self.records {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.iter,
                num(r.elapsed_s),
                num(r.best_obj),
                r.norm_sq.map(num).unwrap_or_default(),
                r.gap.map(num).unwrap_or_default(),
                r.set_size
            )?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }
}
