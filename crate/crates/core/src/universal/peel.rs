use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::setfn::{BasePoint, SetFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
struct Key(f64);

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Weighted peeling: repeatedly remove the element extremizing
/// `w(v) + f(v | S - v)` (the minimum for supermodular `f`, the maximum for
/// submodular `f`), recording its marginal. Returns the greedy vertex and the
/// removal order. Ties go to the smaller index.
pub fn peel_weighted<F: SetFunction + ?Sized>(oracle: &F, w: &[f64]) -> Result<(BasePoint, Vec<usize>)> {
    peel_directed(oracle, w, oracle.orientation().sign())
}

/// Peels the minimizer of `sign * (w(v) + f(v | S - v))`.
pub(crate) fn peel_directed<F: SetFunction + ?Sized>(
    oracle: &F,
    w: &[f64],
    sign: f64,
) -> Result<(BasePoint, Vec<usize>)> {
    let n = oracle.len();
    if w.len() != n {
        return Err(Error::InvalidParameter(format!(
            "weights have length {}, ground set has {n}",
            w.len()
        )));
    }
    let mut peeler = oracle.peeler();
    let mut version = vec![0u32; n];
    let mut alive = vec![true; n];
    let mut heap = BinaryHeap::with_capacity(2 * n);
    for v in 0..n {
        heap.push(Reverse((Key(sign * (w[v] + peeler.marginal(v))), v, 0u32)));
    }
    let mut x = vec![0.0; n];
    let mut order = Vec::with_capacity(n);
    let mut touched = Vec::new();
    while let Some(Reverse((_, v, ver))) = heap.pop() {
        if !alive[v] || ver != version[v] {
            continue;
        }
        x[v] = peeler.marginal(v);
        alive[v] = false;
        order.push(v);
        touched.clear();
        peeler.remove(v, &mut touched);
        touched.sort_unstable();
        touched.dedup();
        for &u in &touched {
            if alive[u] {
                version[u] += 1;
                heap.push(Reverse((Key(sign * (w[u] + peeler.marginal(u))), u, version[u])));
            }
        }
    }
    let f_of_v = oracle.value(&vec![true; n]);
    Ok((BasePoint::new(x, f_of_v), order))
}
