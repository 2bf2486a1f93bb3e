//! The commands besides `solve` and `bench`.

use std::fmt::Write as _;

use super::args::{BruteArgs, DecomposeAlgo, DecomposeArgs, MaxflowArgs, ModeArg, PerturbArgs, Problem};
use super::run::{load, oracle, Loaded};
use super::CliError;
use crate::brute::{brute_densest, brute_max_ratio, brute_min_f, brute_min_ratio, brute_mnp};
use crate::extract::dense_decomposition;
use crate::flow::{flow_dense_decomposition, read_dimacs, DensityInstance, MaxFlowEngine};
use crate::fmt::num;
use crate::problems::io::{read_edge_list, write_vector};
use crate::problems::perturb_membership;
use crate::textio::write_file;

fn ids(set: &[usize]) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => Ok(write_file(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn brute(args: &BruteArgs) -> Result<String, CliError> {
    let loaded = load(&args.instance)?;
    let f = oracle(&loaded, args.instance.problem, args.instance.p)?;
    let mut out = String::new();
    match args.mode {
        ModeArg::MinF => {
            let a = brute_min_f(&*f)?;
            let _ = writeln!(out, "value,{}\nset,{}", num(a.value), ids(&a.set));
        }
        ModeArg::MaxRatio | ModeArg::MinRatio => {
            let s = if args.mode == ModeArg::MaxRatio {
                brute_max_ratio(&*f)?
            } else {
                brute_min_ratio(&*f)?
            };
            let _ = writeln!(out, "ratio,{}\nvalue,{}\nset,{}", num(s.ratio), num(s.f_value), ids(&s.set));
        }
        ModeArg::MnpQp => {
            let x = brute_mnp(&*f)?;
            let norm: f64 = x.iter().map(|v| v * v).sum();
            let xs: Vec<String> = x.iter().map(|&v| num(v)).collect();
            let _ = writeln!(out, "norm_sq,{}\nx,{}", num(norm), xs.join(" "));
        }
    }
    Ok(out)
}

pub fn decompose(args: &DecomposeArgs) -> Result<(), CliError> {
    let loaded = load(&args.instance)?;
    let d = match args.algo {
        DecomposeAlgo::Flow | DecomposeAlgo::ExactFlowBaseline => {
            let engine = if args.algo == DecomposeAlgo::Flow {
                MaxFlowEngine::PushRelabel
            } else {
                MaxFlowEngine::EdmondsKarp
            };
            let inst = match (&loaded, args.instance.problem) {
                (Loaded::Graph(g), Problem::Dsg | Problem::Mnp) => DensityInstance::dsg(g),
                (Loaded::Anchored(g, a), _) => DensityInstance::anchored(g, a),
                (_, p) => {
                    return Err(CliError::incompatible(format!(
                        "flow decomposition supports dsg, mnp and anchored, not {}; use --algo brute",
                        p.name()
                    )))
                }
            };
            flow_dense_decomposition(&inst, engine)?
        }
        DecomposeAlgo::Brute => {
            let f = oracle(&loaded, args.instance.problem, args.instance.p)?;
            dense_decomposition(&*f, brute_densest)?
        }
    };
    emit(args.out.as_deref(), &d.to_csv())
}

pub fn perturb(args: &PerturbArgs) -> Result<(), CliError> {
    let g = read_edge_list(&args.input)?;
    let p = perturb_membership(&g, args.eps)?;
    eprintln!(
        "densest set {} (density {}); moved {} from {} to {}",
        ids(&p.densest.set),
        num(p.densest.ratio),
        num(args.eps),
        p.moved.0,
        p.moved.1
    );
    emit(args.out.as_deref(), &write_vector(&p.instance.y))
}

pub fn maxflow(args: &MaxflowArgs) -> Result<String, CliError> {
    let fi = read_dimacs(&args.input)?;
    let cut = MaxFlowEngine::from(args.engine).run(&fi);
    let side: Vec<usize> = (0..fi.nodes()).filter(|&v| cut.source_side[v]).collect();
    Ok(format!("value,{}\nsource_side,{}\n", num(cut.value), ids(&side)))
}
