use super::RatioSolution;
use crate::error::{Error, Result};
use crate::setfn::{mask_of, SetFunction};

/// The ratio `num / den` kept as a fraction so cut networks can scale by the
/// denominator and stay integral on integer data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lambda {
    pub num: f64,
    pub den: f64,
}

impl Lambda {
    pub fn value(self) -> f64 {
        self.num / self.den
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DinkelbachRun {
    pub solution: RatioSolution,
    /// `λ_0, λ_1, ..`: the ratio of each accepted set, strictly increasing.
    pub lambdas: Vec<f64>,
    /// Subproblem calls, the final (non-improving) one included.
    pub calls: usize,
}

/// Density improvement: `S_0 = V`, then
/// `S_{k+1} = argmax_{S ⊆ S_k} f(S) - λ_k |S|` with `λ_k = f(S_k)/|S_k|`,
/// until the subproblem optimum is zero.
///
/// `subproblem(restriction, λ)` must return an exact maximizer of
/// `den * f(S) - num * |S|` among subsets of `restriction` (element lists of
/// the oracle's ground set). Returning a set outside the restriction is an
/// internal error.
pub fn dinkelbach<F, P>(oracle: &F, mut subproblem: P) -> Result<DinkelbachRun>
where
    F: SetFunction + ?Sized,
    P: FnMut(&[usize], Lambda) -> Result<Vec<usize>>,
{
    let n = oracle.len();
    let tau = oracle.len() as f64 * 1e-9;
    let mut current: Vec<usize> = (0..n).collect();
    let mut f_current = oracle.value(&vec![true; n]);
    let mut lambdas = vec![f_current / n as f64];
    let mut calls = 0;
    loop {
        calls += 1;
        if calls > n + 1 {
            return Err(Error::Internal(format!(
                "density improvement exceeded {} subproblem calls",
                n + 1
            )));
        }
        let lambda = Lambda {
            num: f_current,
            den: current.len() as f64,
        };
        let mut next = subproblem(&current, lambda)?;
        next.sort_unstable();
        next.dedup();
        let inside = mask_of(n, &current);
        if let Some(&bad) = next.iter().find(|&&v| v >= n || !inside[v]) {
            return Err(Error::Internal(format!(
                "subproblem returned element {bad} outside the current set"
            )));
        }
        if next.is_empty() {
            break;
        }
        let f_next = oracle.value(&mask_of(n, &next));
        let gain = lambda.den * f_next - lambda.num * next.len() as f64;
        let scale = 1.0 + (lambda.den * f_next).abs() + (lambda.num * next.len() as f64).abs();
        if gain <= tau * scale {
            break;
        }
        current = next;
        f_current = f_next;
        lambdas.push(f_current / current.len() as f64);
    }
    Ok(DinkelbachRun {
        solution: RatioSolution::new(current, f_current),
        lambdas,
        calls,
    })
}
