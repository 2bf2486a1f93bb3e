use super::peel::peel_weighted;
use super::{lmo_with_order, Progress, SolveOutcome, Tracker};
use crate::error::Result;
use crate::setfn::{BasePoint, SetFunction, SolverConfig, StepRule};

/// SuperGreedy++: `x_0 = 0`; iteration `t` peels with weights
/// `(t - 1) x_{t-1}` and averages the peeled vertex in with rate `1/(t+1)`
/// (or `2/(t+2)` under [`StepRule::Standard`]).
///
/// Starting from zero, `x_t` carries total mass `1 - Π(1 - α_s)` rather
/// than one, so gaps are measured at `x_t / mass`, the matching convex
/// combination of peeled vertices, which lies in `B(f)`.
pub fn supergreedy_pp<F: SetFunction + ?Sized>(oracle: &F, cfg: &SolverConfig) -> Result<SolveOutcome> {
    run(oracle, cfg, |_| false)
}

pub(super) struct Stepper<'a, F: ?Sized> {
    oracle: &'a F,
    rule: StepRule,
    pub t: usize,
    /// The raw iterate `x_t`.
    pub x: Vec<f64>,
    pub mass: f64,
    f_of_v: f64,
}

impl<'a, F: SetFunction + ?Sized> Stepper<'a, F> {
    pub fn new(oracle: &'a F, rule: StepRule) -> Self {
        let n = oracle.len();
        Stepper {
            oracle,
            rule,
            t: 0,
            x: vec![0.0; n],
            mass: 0.0,
            f_of_v: oracle.value(&vec![true; n]),
        }
    }

    /// One iteration; returns the peeled vertex and its order.
    pub fn step(&mut self) -> Result<(BasePoint, Vec<usize>)> {
        self.t += 1;
        let scale = (self.t - 1) as f64;
        let w: Vec<f64> = self.x.iter().map(|v| scale * v).collect();
        let (d, order) = peel_weighted(self.oracle, &w)?;
        let alpha = self.rule.rate(self.t);
        for (xi, di) in self.x.iter_mut().zip(d.x()) {
            *xi = (1.0 - alpha) * *xi + alpha * di;
        }
        self.mass = (1.0 - alpha) * self.mass + alpha;
        Ok((d, order))
    }

    pub fn normalized(&self) -> BasePoint {
        BasePoint::new(self.x.iter().map(|v| v / self.mass).collect(), self.f_of_v)
    }
}

pub(super) fn run<F, O>(oracle: &F, cfg: &SolverConfig, observer: O) -> Result<SolveOutcome>
where
    F: SetFunction + ?Sized,
    O: FnMut(&Progress<'_>) -> bool,
{
    let mut tracker = Tracker::new(oracle, cfg, observer)?;
    let mut s = Stepper::new(oracle, cfg.step_rule);
    while s.t < cfg.max_iters {
        let (d, order) = s.step()?;
        tracker.offer_peel(&d, &order);
        let xbar = s.normalized();
        let gap = if s.t % cfg.trace_every == 0 || s.t == cfg.max_iters {
            let (q, order) = lmo_with_order(oracle, xbar.x())?;
            tracker.offer_peel(&q, &order);
            Some(xbar.norm_sq() - crate::setfn::base::dot(q.x(), xbar.x()))
        } else {
            None
        };
        tracker.record(s.t, &xbar, gap);
        if tracker.should_stop() {
            if gap.is_none() {
                // observer stop between evaluations: evaluate once more
                let (q, _) = lmo_with_order(oracle, xbar.x())?;
                let g = xbar.norm_sq() - crate::setfn::base::dot(q.x(), xbar.x());
                tracker.note_gap(&xbar, g);
            }
            break;
        }
    }
    Ok(tracker.finish(s.t))
}
