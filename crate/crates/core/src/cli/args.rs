use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::brute::BruteMode;
use crate::flow::MaxFlowEngine;
use crate::setfn::StepRule;

#[derive(Debug, Parser)]
#[command(name = "ratioforge", version, about = "Ratio optimization over sub/supermodular set functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one problem instance with one algorithm.
    Solve(SolveArgs),
    /// Exhaustive reference answer for a small instance.
    Brute(BruteArgs),
    /// Run every entry of a TOML suite and collect traces.
    Bench(BenchArgs),
    /// Dense decomposition of a supermodular instance.
    Decompose(DecomposeArgs),
    /// Write a perturbed membership vector that is a NO instance.
    Perturb(PerturbArgs),
    /// Maximum flow of a DIMACS network.
    Maxflow(MaxflowArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Dsg,
    Pmean,
    Hnsn,
    Anchored,
    Mincut,
    Membership,
    Mnp,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Dsg => "dsg",
            Problem::Pmean => "pmean",
            Problem::Hnsn => "hnsn",
            Problem::Anchored => "anchored",
            Problem::Mincut => "mincut",
            Problem::Membership => "membership",
            Problem::Mnp => "mnp",
        }
    }

    pub fn valid_algos(self) -> &'static [Algo] {
        use Algo::*;
        match self {
            Problem::Pmean => &[Supergreedy, Fw, Mnp, Brute],
            _ => &[Supergreedy, Fw, Mnp, Flow, ExactFlowBaseline, Brute],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algo {
    Supergreedy,
    Fw,
    Mnp,
    /// Exact, push-relabel max flow.
    Flow,
    /// Exact, Edmonds-Karp max flow.
    #[value(name = "exact_flow_baseline")]
    ExactFlowBaseline,
    Brute,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Supergreedy => "supergreedy",
            Algo::Fw => "fw",
            Algo::Mnp => "mnp",
            Algo::Flow => "flow",
            Algo::ExactFlowBaseline => "exact_flow_baseline",
            Algo::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepRuleArg {
    #[default]
    Harmonic,
    Standard,
}

impl From<StepRuleArg> for StepRule {
    fn from(s: StepRuleArg) -> Self {
        match s {
            StepRuleArg::Harmonic => StepRule::Harmonic,
            StepRuleArg::Standard => StepRule::Standard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum EngineArg {
    #[default]
    PushRelabel,
    EdmondsKarp,
}

impl From<EngineArg> for MaxFlowEngine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::PushRelabel => MaxFlowEngine::PushRelabel,
            EngineArg::EdmondsKarp => MaxFlowEngine::EdmondsKarp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[value(name = "min_f")]
    MinF,
    #[value(name = "max_ratio")]
    MaxRatio,
    #[value(name = "min_ratio")]
    MinRatio,
    #[value(name = "mnp_qp")]
    MnpQp,
}

impl From<ModeArg> for BruteMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::MinF => BruteMode::MinF,
            ModeArg::MaxRatio => BruteMode::MaxRatio,
            ModeArg::MinRatio => BruteMode::MinRatio,
            ModeArg::MnpQp => BruteMode::MnpQp,
        }
    }
}

/// Instance selection shared by the commands that build an oracle.
#[derive(Debug, Clone, Args)]
pub struct InstanceArgs {
    #[arg(long, value_enum)]
    pub problem: Problem,
    /// Edge list, bipartite file (hnsn) or DIMACS network (mincut).
    #[arg(long)]
    pub input: PathBuf,
    /// Exponent for pmean.
    #[arg(long)]
    pub p: Option<f64>,
    /// Anchor vertex file for anchored.
    #[arg(long)]
    pub anchors: Option<PathBuf>,
    /// Queried vector for membership.
    #[arg(long)]
    pub y: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[arg(long, default_value_t = 100)]
    pub iters: usize,
    #[arg(long, default_value_t = 0.0)]
    pub eps: f64,
    /// Trace CSV output.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Summary CSV output (header plus one line).
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// Final continuous point, one entry per line.
    #[arg(long)]
    pub point: Option<PathBuf>,
    /// Accepted for compatibility; every algorithm is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write zero elapsed times so traces are reproducible byte for byte.
    #[arg(long)]
    pub logical_clock: bool,
    #[arg(long, value_enum, default_value_t = StepRuleArg::Harmonic)]
    pub step_rule: StepRuleArg,
    /// Gap evaluation cadence; defaults by instance size.
    #[arg(long)]
    pub trace_every: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct BruteArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, value_enum)]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub suite: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Force the logical clock on every run.
    #[arg(long)]
    pub logical_clock: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecomposeAlgo {
    Flow,
    #[value(name = "exact_flow_baseline")]
    ExactFlowBaseline,
    Brute,
}

#[derive(Debug, Clone, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = DecomposeAlgo::Flow)]
    pub algo: DecomposeAlgo,
    /// CSV output (`block_id,level,element`); stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PerturbArgs {
    /// Edge list.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub eps: f64,
    /// Vector output; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct MaxflowArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = EngineArg::PushRelabel)]
    pub engine: EngineArg,
}
