//! The universal solvers over any [`SetFunction`]: SuperGreedy++,
//! Frank-Wolfe and the Fujishige-Wolfe minimum-norm-point algorithm.

mod frank_wolfe;
mod peel;
mod supergreedy;
mod trace;
mod wolfe;

use std::time::Instant;

pub use frank_wolfe::frank_wolfe;
pub use peel::peel_weighted;
pub use supergreedy::supergreedy_pp;
pub use trace::{ConvergenceTrace, TraceRecord, TRACE_HEADER};
pub use wolfe::fujishige_wolfe;

#[cfg(test)]
pub(crate) use peel::peel_directed;

use crate::error::Result;
use crate::extract::Extracted;
use crate::setfn::{edmonds_greedy, lmo_order, BasePoint, Orientation, SetFunction, SolverConfig, TraceObjective};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    SuperGreedy,
    FrankWolfe,
    FujishigeWolfe,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::SuperGreedy, Algorithm::FrankWolfe, Algorithm::FujishigeWolfe];
}

/// What a solver hands back.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    /// The evaluated iterate with the smallest duality gap.
    pub point: BasePoint,
    /// Duality gap of `point`.
    pub gap: f64,
    pub iterations: usize,
    pub trace: ConvergenceTrace,
    /// Best discrete answer met along the way.
    pub best: Extracted,
    pub objective: TraceObjective,
    /// `gap <= eps^2` for a positive `eps`, or an exact zero gap.
    pub converged: bool,
}

/// Progress passed to observers after every traced iteration.
#[derive(Debug)]
pub struct Progress<'a> {
    pub iter: usize,
    pub gap: Option<f64>,
    pub best: &'a Extracted,
}

/// Runs `algo`; see [`solve_observed`].
pub fn solve<F: SetFunction + ?Sized>(oracle: &F, algo: Algorithm, cfg: &SolverConfig) -> Result<SolveOutcome> {
    solve_observed(oracle, algo, cfg, |_| false)
}

/// Runs `algo`, calling `observer` after every iteration; the run stops
/// early once it returns `true`.
pub fn solve_observed<F, O>(oracle: &F, algo: Algorithm, cfg: &SolverConfig, observer: O) -> Result<SolveOutcome>
where
    F: SetFunction + ?Sized,
    O: FnMut(&Progress<'_>) -> bool,
{
    match algo {
        Algorithm::SuperGreedy => supergreedy::run(oracle, cfg, observer),
        Algorithm::FrankWolfe => frank_wolfe::run(oracle, cfg, observer),
        Algorithm::FujishigeWolfe => wolfe::run(oracle, cfg, observer),
    }
}

pub fn default_objective(orientation: Orientation) -> TraceObjective {
    match orientation {
        Orientation::Supermodular => TraceObjective::DenseRatio,
        Orientation::Submodular => TraceObjective::MinValue,
    }
}

/// The LMO vertex at `x` together with its peel order.
pub(crate) fn lmo_with_order<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<(BasePoint, Vec<usize>)> {
    let order = lmo_order(oracle.orientation(), x);
    Ok((edmonds_greedy(oracle, &order)?, order))
}

/// Bookkeeping shared by the three solvers: the trace, the best discrete
/// answer, and the best-gap iterate.
pub(crate) struct Tracker<O> {
    objective: TraceObjective,
    start: Instant,
    logical: bool,
    target: f64,
    best: Extracted,
    trace: ConvergenceTrace,
    best_gap: f64,
    best_point: Option<BasePoint>,
    observer: O,
    stop: bool,
}

impl<O: FnMut(&Progress<'_>) -> bool> Tracker<O> {
    pub fn new<F: SetFunction + ?Sized>(oracle: &F, cfg: &SolverConfig, observer: O) -> Result<Self> {
        cfg.validate()?;
        let objective = cfg.objective.unwrap_or_else(|| default_objective(oracle.orientation()));
        Ok(Tracker {
            objective,
            start: Instant::now(),
            logical: cfg.logical_clock,
            target: cfg.target_gap(),
            best: Extracted {
                set: Vec::new(),
                f_value: f64::NAN,
                objective: objective.worst(),
            },
            trace: ConvergenceTrace::default(),
            best_gap: f64::INFINITY,
            best_point: None,
            observer,
            stop: false,
        })
    }

    /// Considers every set left along a greedy peel of `order` producing `q`:
    /// the suffixes `order[j..]`, whose values telescope from `q`.
    pub fn offer_peel(&mut self, q: &BasePoint, order: &[usize]) {
        let seq: Vec<usize> = order.iter().rev().copied().collect();
        let mut values = Vec::with_capacity(seq.len() + 1);
        let mut acc = 0.0;
        values.push(0.0);
        for &v in &seq {
            acc += q.x()[v];
            values.push(acc);
        }
        let cand = crate::extract::rounding::scan_prefixes(&seq, &values, self.objective);
        if self.best.f_value.is_nan() || self.objective.improves(cand.objective, self.best.objective) {
            self.best = cand;
        }
    }

    /// Appends a trace row for iterate `x`; a gap marks it as evaluated.
    pub fn record(&mut self, iter: usize, x: &BasePoint, gap: Option<f64>) {
        if let Some(g) = gap {
            if g < self.best_gap || self.best_point.is_none() {
                self.best_gap = g;
                self.best_point = Some(x.clone());
            }
            if g <= self.target {
                self.stop = true;
            }
        }
        let elapsed_s = if self.logical {
            0.0
        } else {
            self.start.elapsed().as_secs_f64()
        };
        self.trace.push(TraceRecord {
            iter,
            elapsed_s,
            best_obj: self.best.objective,
            norm_sq: Some(x.norm_sq()),
            gap,
            set_size: self.best.set.len(),
        });
        let progress = Progress {
            iter,
            gap,
            best: &self.best,
        };
        if (self.observer)(&progress) {
            self.stop = true;
        }
    }

    /// A gap evaluated outside [`Tracker::record`].
    pub fn note_gap(&mut self, x: &BasePoint, g: f64) {
        if g < self.best_gap || self.best_point.is_none() {
            self.best_gap = g;
            self.best_point = Some(x.clone());
        }
    }

    /// Replaces the reported point with an equally good or better one.
    pub fn replace_point(&mut self, x: &BasePoint, g: f64) {
        if g <= self.best_gap.max(0.0) {
            self.best_gap = g.max(self.best_gap.min(0.0));
            self.best_point = Some(x.clone());
        }
    }

    pub fn should_stop(&self) -> bool {
        self.stop
    }

    pub fn finish(self, iterations: usize) -> SolveOutcome {
        let point = self.best_point.expect("at least one gap is evaluated");
        SolveOutcome {
            converged: self.best_gap <= self.target,
            point,
            gap: self.best_gap,
            iterations,
            trace: self.trace,
            best: self.best,
            objective: self.objective,
        }
    }
}
