//! Suite runner. A suite is a TOML file of `[[run]]` tables:
//!
//! ```toml
//! [[run]]
//! problem = "dsg"
//! algo = "supergreedy"
//! input = "k5k3.txt"      # relative to the suite file
//! iters = 200
//! ```
//!
//! Every run writes `<name>.trace.csv` into the output directory; the
//! directory also gets `summary.csv`, `failures.csv` and, for min-cut runs
//! that are not already flow runs, `references.csv` with the Edmonds-Karp
//! value and time.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Deserialize;

use super::args::{Algo, Problem, StepRuleArg};
use super::run::{execute, RunReport, RunSpec, SUMMARY_HEADER};
use super::CliError;
use crate::error::Error;
use crate::flow::{edmonds_karp, read_dimacs};
use crate::fmt::num;
use crate::textio::{read_file, write_file};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Suite {
    #[serde(default)]
    run: Vec<Entry>,
}

fn default_iters() -> usize {
    100
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    name: Option<String>,
    problem: Problem,
    algo: Algo,
    input: PathBuf,
    p: Option<f64>,
    anchors: Option<PathBuf>,
    y: Option<PathBuf>,
    #[serde(default = "default_iters")]
    iters: usize,
    #[serde(default)]
    eps: f64,
    #[serde(default)]
    step_rule: StepRuleArg,
    trace_every: Option<usize>,
    #[serde(default)]
    logical_clock: bool,
}

/// A named run of a parsed suite.
#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub name: String,
    pub spec: RunSpec,
}

/// Parses a suite; relative paths are resolved against `base`.
pub fn parse_suite(label: &str, text: &str, base: &Path) -> Result<Vec<SuiteRun>, CliError> {
    let suite: Suite = toml::from_str(text).map_err(|e| {
        let (line, column) = e
            .span()
            .map(|s| line_col(text, s.start))
            .unwrap_or((1, 1));
        CliError::from(Error::Parse {
            path: label.to_string(),
            line,
            column,
            message: e.message().to_string(),
        })
    })?;
    let resolve = |p: PathBuf| if p.is_absolute() { p } else { base.join(p) };
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut runs = Vec::with_capacity(suite.run.len());
    for e in suite.run {
        let stem = e
            .input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".into());
        let base_name = e
            .name
            .clone()
            .unwrap_or_else(|| format!("{}-{}-{stem}", e.problem.name(), e.algo.name()));
        let count = seen.entry(base_name.clone()).or_insert(0);
        *count += 1;
        let name = if *count == 1 { base_name } else { format!("{base_name}-{count}") };
        let spec = RunSpec {
            problem: e.problem,
            algo: e.algo,
            input: resolve(e.input),
            p: e.p,
            anchors: e.anchors.map(resolve),
            y: e.y.map(resolve),
            iters: e.iters,
            eps: e.eps,
            step_rule: e.step_rule,
            trace_every: e.trace_every,
            logical_clock: e.logical_clock,
        };
        runs.push(SuiteRun { name, spec });
    }
    Ok(runs)
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

/// Worker count: `RATIOFORGE_THREADS` if set to a positive integer,
/// otherwise the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("RATIOFORGE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |k| k.get()))
}

struct Reference {
    value: f64,
    elapsed_s: f64,
}

struct Outcome {
    result: Result<RunReport, CliError>,
    reference: Option<Result<Reference, CliError>>,
}

fn run_one(spec: &RunSpec) -> Outcome {
    let result = execute(spec);
    let wants_reference = spec.problem == Problem::Mincut && !matches!(spec.algo, Algo::Flow | Algo::ExactFlowBaseline);
    let reference = wants_reference.then(|| {
        let fi = read_dimacs(&spec.input)?;
        let start = Instant::now();
        let cut = edmonds_karp(&fi);
        let elapsed_s = if spec.logical_clock { 0.0 } else { start.elapsed().as_secs_f64() };
        Ok(Reference {
            value: cut.value,
            elapsed_s,
        })
    });
    Outcome { result, reference }
}

/// Summary of a finished suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchStats {
    pub runs: usize,
    pub failures: usize,
}

/// Runs every entry and writes the output directory. Individual failures
/// are recorded in `failures.csv` and do not stop the suite.
pub fn run_suite(runs: &[SuiteRun], out: &Path, threads: usize) -> Result<BenchStats, CliError> {
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    if runs.is_empty() {
        return Ok(BenchStats { runs: 0, failures: 0 });
    }
    let slots: Vec<Mutex<Option<Outcome>>> = runs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.clamp(1, runs.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= runs.len() {
                    break;
                }
                let outcome = run_one(&runs[i].spec);
                *slots[i].lock().expect("slot lock") = Some(outcome);
            });
        }
    });

    let mut summary = format!("name,{SUMMARY_HEADER}\n");
    let mut failures = String::from("name,exit_code,message\n");
    let mut references = String::from("name,engine,value,elapsed_s\n");
    let mut failed = 0;
    let mut any_reference = false;
    for (run, slot) in runs.iter().zip(slots) {
        let outcome = slot.into_inner().expect("slot lock").expect("every run finished");
        match outcome.result {
            Ok(report) => {
                write_file(&out.join(format!("{}.trace.csv", run.name)), &report.trace.to_csv())?;
                let _ = writeln!(summary, "{},{}", run.name, report.summary_line());
            }
            Err(e) => {
                failed += 1;
                let _ = writeln!(failures, "{},{},{}", run.name, e.code, csv_field(&e.message));
            }
        }
        if let Some(Ok(r)) = outcome.reference {
            any_reference = true;
            let _ = writeln!(references, "{},edmonds_karp,{},{}", run.name, num(r.value), num(r.elapsed_s));
        }
    }
    write_file(&out.join("summary.csv"), &summary)?;
    write_file(&out.join("failures.csv"), &failures)?;
    if any_reference {
        write_file(&out.join("references.csv"), &references)?;
    }
    Ok(BenchStats {
        runs: runs.len(),
        failures: failed,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn bench(suite: &Path, out: &Path, logical_clock: bool) -> Result<BenchStats, CliError> {
    let text = read_file(suite)?;
    let base = suite.parent().unwrap_or(Path::new("."));
    let mut runs = parse_suite(&suite.display().to_string(), &text, base)?;
    if logical_clock {
        for r in &mut runs {
            r.spec.logical_clock = true;
        }
    }
    run_suite(&runs, out, thread_count())
}
