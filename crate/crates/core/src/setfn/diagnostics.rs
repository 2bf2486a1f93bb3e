//! Quantities that appear only in iteration bounds. Nothing in the solvers
//! depends on them; they are reported for inspection.

use super::SetFunction;

/// `f(v | V - v)` for every `v`.
pub fn singleton_marginals<F: SetFunction + ?Sized>(oracle: &F) -> Vec<f64> {
    let mut p = oracle.peeler();
    (0..oracle.len()).map(|v| p.marginal(v)).collect()
}

/// `alpha_f = max_v (f(V) - f(V - v))`.
pub fn alpha<F: SetFunction + ?Sized>(oracle: &F) -> f64 {
    singleton_marginals(oracle)
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Additive LMO error of one SuperGreedy++ peel at iteration `t`:
/// `n * sum_u f(u | V - u)^2 / t`.
pub fn peel_lmo_error<F: SetFunction + ?Sized>(oracle: &F, t: usize) -> f64 {
    let n = oracle.len() as f64;
    let s: f64 = singleton_marginals(oracle).iter().map(|m| m * m).sum();
    n * s / t.max(1) as f64
}

/// Squared diameter bound `max ||s - d||^2` over the greedy vertices reachable
/// from the identity order and its reverse; a cheap lower estimate of the
/// curvature constant of `||x||^2` on `B(f)`.
pub fn vertex_spread<F: SetFunction + ?Sized>(oracle: &F) -> f64 {
    let n = oracle.len();
    let fwd: Vec<usize> = (0..n).collect();
    let rev: Vec<usize> = (0..n).rev().collect();
    match (
        super::edmonds_greedy(oracle, &fwd),
        super::edmonds_greedy(oracle, &rev),
    ) {
        (Ok(a), Ok(b)) => a
            .x()
            .iter()
            .zip(b.x())
            .map(|(p, q)| (p - q) * (p - q))
            .sum(),
        _ => f64::NAN,
    }
}
