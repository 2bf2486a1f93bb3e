//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or I/O failure, 3 incompatible
//! problem/algorithm or instance out of range, 4 budget exhausted without a
//! certificate.

pub mod args;
pub mod bench;
mod commands;
pub mod run;

use std::ffi::OsString;

use clap::Parser;

use crate::error::Error;
use args::{Cli, Command};
pub use run::{execute, Certified, RunReport, RunSpec, SUMMARY_HEADER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCOMPATIBLE: i32 = 3;
pub const EXIT_UNCERTIFIED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn incompatible(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INCOMPATIBLE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io { .. } => EXIT_PARSE,
            Error::InvalidParameter(_) => EXIT_USAGE,
            Error::EmptyGroundSet
            | Error::TooLarge { .. }
            | Error::Orientation(_)
            | Error::Precondition(_)
            | Error::Internal(_) => EXIT_INCOMPATIBLE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Solve(a) => {
            let spec = RunSpec {
                problem: a.instance.problem,
                algo: a.algo,
                input: a.instance.input.clone(),
                p: a.instance.p,
                anchors: a.instance.anchors.clone(),
                y: a.instance.y.clone(),
                iters: a.iters,
                eps: a.eps,
                step_rule: a.step_rule,
                trace_every: a.trace_every,
                logical_clock: a.logical_clock,
            };
            let report = execute(&spec)?;
            run::write_outputs(&report, a.trace.as_deref(), a.summary.as_deref(), a.point.as_deref())?;
            println!("{}", report.summary_line());
            if let Some(answer) = &report.answer {
                eprintln!("membership: {answer}");
            }
            Ok(if report.uncertified { EXIT_UNCERTIFIED } else { EXIT_OK })
        }
        Command::Brute(a) => {
            print!("{}", commands::brute(&a)?);
            Ok(EXIT_OK)
        }
        Command::Bench(a) => {
            let stats = bench::bench(&a.suite, &a.out, a.logical_clock)?;
            eprintln!("{} runs, {} failed", stats.runs, stats.failures);
            Ok(EXIT_OK)
        }
        Command::Decompose(a) => commands::decompose(&a).map(|_| EXIT_OK),
        Command::Perturb(a) => commands::perturb(&a).map(|_| EXIT_OK),
        Command::Maxflow(a) => {
            print!("{}", commands::maxflow(&a)?);
            Ok(EXIT_OK)
        }
    }
}
