use super::{lmo_with_order, Progress, SolveOutcome, Tracker};
use crate::error::Result;
use crate::setfn::base::dot;
use crate::setfn::{BasePoint, SetFunction, SolverConfig};

/// Frank-Wolfe on `min ||x||^2` over `B(f)`: starts at the LMO vertex for
/// the zero direction, then `x_k = (1 - α_k) x_{k-1} + α_k d_k` with
/// `α_k = 2/(k+2)`. Every LMO call also yields the duality gap.
pub fn frank_wolfe<F: SetFunction + ?Sized>(oracle: &F, cfg: &SolverConfig) -> Result<SolveOutcome> {
    run(oracle, cfg, |_| false)
}

pub(super) fn run<F, O>(oracle: &F, cfg: &SolverConfig, observer: O) -> Result<SolveOutcome>
where
    F: SetFunction + ?Sized,
    O: FnMut(&Progress<'_>) -> bool,
{
    let mut tracker = Tracker::new(oracle, cfg, observer)?;
    let n = oracle.len();
    let (x0, order) = lmo_with_order(oracle, &vec![0.0; n])?;
    tracker.offer_peel(&x0, &order);
    let f_of_v = x0.f_of_v();
    let mut x = x0.into_vec();
    let mut k = 0;
    loop {
        let (q, order) = lmo_with_order(oracle, &x)?;
        let gap = dot(&x, &x) - dot(q.x(), &x);
        tracker.offer_peel(&q, &order);
        let point = BasePoint::new(x.clone(), f_of_v);
        tracker.record(k, &point, Some(gap));
        if tracker.should_stop() || k == cfg.max_iters {
            break;
        }
        k += 1;
        let alpha = 2.0 / (k as f64 + 2.0);
        for (xi, qi) in x.iter_mut().zip(q.x()) {
            *xi = (1.0 - alpha) * *xi + alpha * qi;
        }
    }
    Ok(tracker.finish(k))
}
