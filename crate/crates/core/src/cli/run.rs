//! One solver run: load the instance, dispatch, and collect the summary.

use std::path::{Path, PathBuf};
use std::time::Instant;

use super::args::{Algo, InstanceArgs, Problem, StepRuleArg};
use super::CliError;
use crate::brute::{brute_max_ratio, brute_max_value, brute_min_f, brute_mnp};
use crate::extract::best_prefix_dense;
use crate::flow::{
    flow_dense_decomposition, flow_density_solver, flow_hnsn_solver_with, membership_max_violation, read_dimacs,
    DensityInstance, FlowInstance, MaxFlowEngine,
};
use crate::fmt::num;
use crate::problems::io::{read_anchors, read_bipartite, read_edge_list, read_vector};
use crate::problems::{
    anchored_oracle, dsg_oracle, hnsn_oracle, membership_oracle, mincut_oracle, pmean_oracle, AnchorSet,
    MembershipInstance, UndirectedGraph, WeightedBipartiteGraph,
};
use crate::setfn::{SetFunction, SolverConfig, TraceObjective};
use crate::universal::{solve, solve_observed, Algorithm, ConvergenceTrace, TraceRecord};

pub const SUMMARY_HEADER: &str = "problem,algo,best_obj,set_size,elapsed_s,iterations,certified";

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub problem: Problem,
    pub algo: Algo,
    pub input: PathBuf,
    pub p: Option<f64>,
    pub anchors: Option<PathBuf>,
    pub y: Option<PathBuf>,
    pub iters: usize,
    pub eps: f64,
    pub step_rule: StepRuleArg,
    pub trace_every: Option<usize>,
    pub logical_clock: bool,
}

impl RunSpec {
    pub fn new(problem: Problem, algo: Algo, input: impl Into<PathBuf>) -> Self {
        RunSpec {
            problem,
            algo,
            input: input.into(),
            p: None,
            anchors: None,
            y: None,
            iters: 100,
            eps: 0.0,
            step_rule: StepRuleArg::Harmonic,
            trace_every: None,
            logical_clock: false,
        }
    }

    fn instance(&self) -> InstanceArgs {
        InstanceArgs {
            problem: self.problem,
            input: self.input.clone(),
            p: self.p,
            anchors: self.anchors.clone(),
            y: self.y.clone(),
        }
    }

    fn config(&self, n: usize) -> Result<SolverConfig, CliError> {
        let cfg = SolverConfig {
            max_iters: self.iters,
            eps: self.eps,
            trace_every: self.trace_every.unwrap_or_else(|| SolverConfig::trace_every_for(n)),
            step_rule: self.step_rule.into(),
            logical_clock: self.logical_clock,
            ..SolverConfig::default()
        };
        cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certified {
    Exact,
    Gap,
    Heuristic,
}

impl Certified {
    pub fn as_str(self) -> &'static str {
        match self {
            Certified::Exact => "exact",
            Certified::Gap => "gap≤eps2",
            Certified::Heuristic => "heuristic",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub problem: Problem,
    pub algo: Algo,
    pub best_obj: f64,
    pub set: Vec<usize>,
    pub elapsed_s: f64,
    pub iterations: usize,
    pub certified: Certified,
    pub trace: ConvergenceTrace,
    pub point: Option<Vec<f64>>,
    /// A positive `eps` was requested and not reached, or a membership
    /// query stayed undecided.
    pub uncertified: bool,
    /// Human-readable verdict for membership runs.
    pub answer: Option<String>,
}

impl RunReport {
    pub fn summary_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.problem.name(),
            self.algo.name(),
            num(self.best_obj),
            self.set.len(),
            num(self.elapsed_s),
            self.iterations,
            self.certified.as_str()
        )
    }
}

pub(crate) enum Loaded {
    Graph(UndirectedGraph),
    Anchored(UndirectedGraph, AnchorSet),
    Membership(MembershipInstance),
    Bipartite(WeightedBipartiteGraph),
    Network(FlowInstance),
}

pub(crate) fn load(args: &InstanceArgs) -> Result<Loaded, CliError> {
    let require = |opt: &Option<PathBuf>, flag: &str| -> Result<PathBuf, CliError> {
        opt.clone()
            .ok_or_else(|| CliError::usage(format!("--{flag} is required for problem {}", args.problem.name())))
    };
    Ok(match args.problem {
        Problem::Dsg | Problem::Mnp => Loaded::Graph(read_edge_list(&args.input)?),
        Problem::Pmean => {
            if args.p.is_none() {
                return Err(CliError::usage("--p is required for problem pmean"));
            }
            Loaded::Graph(read_edge_list(&args.input)?)
        }
        Problem::Anchored => {
            let anchors = require(&args.anchors, "anchors")?;
            let g = read_edge_list(&args.input)?;
            let a = read_anchors(&anchors, g.n())?;
            Loaded::Anchored(g, a)
        }
        Problem::Membership => {
            let y = require(&args.y, "y")?;
            let g = read_edge_list(&args.input)?;
            let y = read_vector(&y, Some(g.n()))?;
            Loaded::Membership(MembershipInstance::new(g, y)?)
        }
        Problem::Hnsn => Loaded::Bipartite(read_bipartite(&args.input)?),
        Problem::Mincut => Loaded::Network(read_dimacs(&args.input)?),
    })
}

pub(crate) fn oracle<'a>(loaded: &'a Loaded, problem: Problem, p: Option<f64>) -> Result<Box<dyn SetFunction + 'a>, CliError> {
    Ok(match (loaded, problem) {
        (Loaded::Graph(g), Problem::Pmean) => Box::new(pmean_oracle(g, p.unwrap_or(1.0)).map_err(|e| CliError::usage(e.to_string()))?),
        (Loaded::Graph(g), _) => Box::new(dsg_oracle(g)),
        (Loaded::Anchored(g, a), _) => Box::new(anchored_oracle(g, a.clone())),
        (Loaded::Membership(mi), _) => Box::new(membership_oracle(mi)),
        (Loaded::Bipartite(b), _) => Box::new(hnsn_oracle(b)),
        (Loaded::Network(fi), _) => Box::new(mincut_oracle(fi)?),
    })
}

struct Clock {
    start: Instant,
    logical: bool,
}

impl Clock {
    fn elapsed(&self) -> f64 {
        if self.logical {
            0.0
        } else {
            self.start.elapsed().as_secs_f64()
        }
    }
}

/// Source-side nodes (without `s`) of a mincut ground set.
fn mincut_nodes(fi: &FlowInstance, set: &[usize]) -> Result<Vec<usize>, CliError> {
    let o = mincut_oracle(fi)?;
    Ok(set.iter().map(|&i| o.node_of(i)).collect())
}

pub fn execute(spec: &RunSpec) -> Result<RunReport, CliError> {
    let valid = spec.problem.valid_algos();
    if !valid.contains(&spec.algo) {
        let names: Vec<&str> = valid.iter().map(|a| a.name()).collect();
        return Err(CliError::incompatible(format!(
            "algorithm {} does not apply to problem {}; valid: {}",
            spec.algo.name(),
            spec.problem.name(),
            names.join(", ")
        )));
    }
    let loaded = load(&spec.instance())?;
    let clock = Clock {
        start: Instant::now(),
        logical: spec.logical_clock,
    };
    let mut report = match spec.algo {
        Algo::Supergreedy => universal(spec, &loaded, Algorithm::SuperGreedy)?,
        Algo::Fw => universal(spec, &loaded, Algorithm::FrankWolfe)?,
        Algo::Mnp => universal(spec, &loaded, Algorithm::FujishigeWolfe)?,
        Algo::Flow => exact_flow(spec, &loaded, MaxFlowEngine::PushRelabel)?,
        Algo::ExactFlowBaseline => exact_flow(spec, &loaded, MaxFlowEngine::EdmondsKarp)?,
        Algo::Brute => brute(spec, &loaded)?,
    };
    report.elapsed_s = clock.elapsed();
    if report.trace.is_empty() {
        report.trace.push(TraceRecord {
            iter: report.iterations,
            elapsed_s: report.elapsed_s,
            best_obj: report.best_obj,
            norm_sq: report.point.as_ref().map(|x| x.iter().map(|v| v * v).sum()),
            gap: None,
            set_size: report.set.len(),
        });
    }
    Ok(report)
}

fn base_report(spec: &RunSpec) -> RunReport {
    RunReport {
        problem: spec.problem,
        algo: spec.algo,
        best_obj: 0.0,
        set: Vec::new(),
        elapsed_s: 0.0,
        iterations: 0,
        certified: Certified::Exact,
        trace: ConvergenceTrace::default(),
        point: None,
        uncertified: false,
        answer: None,
    }
}

fn universal(spec: &RunSpec, loaded: &Loaded, algo: Algorithm) -> Result<RunReport, CliError> {
    let f = oracle(loaded, spec.problem, spec.p)?;
    let mut cfg = spec.config(f.len())?;
    let mut r = base_report(spec);
    if let Loaded::Membership(mi) = loaded {
        cfg.objective = Some(TraceObjective::DenseRatio);
        let tol = membership_tol(mi);
        let mut found = None;
        let out = solve_observed(&*f, algo, &cfg, |p| {
            if p.best.f_value > tol && found.is_none() {
                found = Some(p.iter);
            }
            found.is_some()
        })?;
        r.iterations = out.iterations;
        r.point = Some(out.point.x().to_vec());
        r.trace = out.trace;
        match found {
            Some(iter) => {
                r.best_obj = out.best.f_value;
                r.set = out.best.set;
                r.answer = Some(format!("no (witness found at iteration {iter})"));
            }
            None => {
                r.certified = Certified::Heuristic;
                r.uncertified = true;
                r.answer = Some(format!("undecided (gap {})", num(out.gap)));
            }
        }
        return Ok(r);
    }
    let out = solve(&*f, algo, &cfg)?;
    r.iterations = out.iterations;
    r.certified = if out.converged { Certified::Gap } else { Certified::Heuristic };
    r.uncertified = spec.eps > 0.0 && !out.converged;
    r.best_obj = match loaded {
        Loaded::Network(fi) => out.best.objective + mincut_oracle(fi)?.source_cut(),
        _ if spec.problem == Problem::Mnp => out.point.norm_sq(),
        _ => out.best.objective,
    };
    r.set = match loaded {
        Loaded::Network(fi) => mincut_nodes(fi, &out.best.set)?,
        _ => out.best.set,
    };
    r.point = Some(out.point.into_vec());
    r.trace = out.trace;
    Ok(r)
}

fn membership_tol(mi: &MembershipInstance) -> f64 {
    1e-9 * (1.0 + mi.graph.total_weight())
}

fn membership_verdict(r: &mut RunReport, mi: &MembershipInstance, violation: f64, witness: Vec<usize>) {
    if violation > membership_tol(mi) {
        r.best_obj = violation;
        r.set = witness;
        r.answer = Some("no".into());
    } else {
        r.answer = Some("yes".into());
    }
}

fn exact_flow(spec: &RunSpec, loaded: &Loaded, engine: MaxFlowEngine) -> Result<RunReport, CliError> {
    let mut r = base_report(spec);
    match loaded {
        Loaded::Graph(g) if spec.problem == Problem::Mnp => {
            let inst = DensityInstance::dsg(g);
            let d = flow_dense_decomposition(&inst, engine)?;
            let x = d.induced_vector(g.n());
            r.best_obj = x.iter().map(|v| v * v).sum();
            r.set = best_prefix_dense(&inst, &x)?.set;
            r.iterations = d.blocks.len();
            r.point = Some(x);
        }
        Loaded::Graph(g) => {
            let s = flow_density_solver(&DensityInstance::dsg(g), engine)?;
            r.best_obj = s.solution.ratio;
            r.set = s.solution.set;
            r.iterations = s.flow_calls;
        }
        Loaded::Anchored(g, a) => {
            let s = flow_density_solver(&DensityInstance::anchored(g, a), engine)?;
            r.best_obj = s.solution.ratio;
            r.set = s.solution.set;
            r.iterations = s.flow_calls;
        }
        Loaded::Bipartite(b) => {
            let s = flow_hnsn_solver_with(b, engine)?;
            r.best_obj = s.solution.ratio;
            r.set = s.solution.set;
            r.iterations = s.flow_calls;
        }
        Loaded::Network(fi) => {
            let cut = engine.run(fi);
            r.best_obj = cut.value;
            r.set = (0..fi.nodes())
                .filter(|&v| cut.source_side[v] && v != fi.source())
                .collect();
            r.iterations = 1;
        }
        Loaded::Membership(mi) => {
            let (violation, witness) = membership_max_violation(mi, engine)?;
            membership_verdict(&mut r, mi, violation, witness);
            r.iterations = 1;
        }
    }
    Ok(r)
}

fn brute(spec: &RunSpec, loaded: &Loaded) -> Result<RunReport, CliError> {
    let f = oracle(loaded, spec.problem, spec.p)?;
    let mut r = base_report(spec);
    r.iterations = 1;
    match loaded {
        Loaded::Graph(_) if spec.problem == Problem::Mnp => {
            let x = brute_mnp(&*f)?;
            r.best_obj = x.iter().map(|v| v * v).sum();
            r.set = best_prefix_dense(&*f, &x)?.set;
            r.point = Some(x);
        }
        Loaded::Network(fi) => {
            let a = brute_min_f(&*f)?;
            r.best_obj = a.value + mincut_oracle(fi)?.source_cut();
            r.set = mincut_nodes(fi, &a.set)?;
        }
        Loaded::Membership(mi) => {
            let a = brute_max_value(&*f)?;
            membership_verdict(&mut r, mi, a.value, a.set);
        }
        _ => {
            let s = brute_max_ratio(&*f)?;
            r.best_obj = s.ratio;
            r.set = s.set;
        }
    }
    Ok(r)
}

/// Writes the trace, summary and point files requested for a run.
pub fn write_outputs(
    report: &RunReport,
    trace: Option<&Path>,
    summary: Option<&Path>,
    point: Option<&Path>,
) -> Result<(), CliError> {
    if let Some(path) = trace {
        crate::textio::write_file(path, &report.trace.to_csv())?;
    }
    if let Some(path) = summary {
        crate::textio::write_file(path, &format!("{SUMMARY_HEADER}\n{}\n", report.summary_line()))?;
    }
    if let (Some(path), Some(x)) = (point, &report.point) {
        crate::textio::write_file(path, &crate::problems::io::write_vector(x))?;
    }
    Ok(())
}
