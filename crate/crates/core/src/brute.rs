//! Exhaustive reference answers for small instances: enumeration over all
//! subsets, and the minimum-norm point by an active-set quadratic program
//! over every base-polytope constraint.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::extract::{Lambda, RatioSolution};
use crate::setfn::base::level_point;
use crate::setfn::{edmonds_greedy, elements_of, SetFunction};

/// Largest ground set for subset enumeration.
pub const ENUMERATION_LIMIT: usize = 20;
/// Largest ground set for the quadratic program.
pub const QP_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteMode {
    MinF,
    MaxRatio,
    MinRatio,
    MnpQp,
}

/// An optimal set and its objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteAnswer {
    pub set: Vec<usize>,
    pub value: f64,
}

fn check(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    Ok(())
}

/// Visits every subset once in Gray-code order, starting from `∅`.
fn for_each_subset(n: usize, mut visit: impl FnMut(&[bool])) {
    let mut mask = vec![false; n];
    visit(&mask);
    for i in 1u64..1 << n {
        let bit = i.trailing_zeros() as usize;
        mask[bit] = !mask[bit];
        visit(&mask);
    }
}

/// `min f(S)` over all subsets, `∅` included; ties keep the first found.
pub fn brute_min_f<F: SetFunction + ?Sized>(oracle: &F) -> Result<BruteAnswer> {
    check(oracle.len(), ENUMERATION_LIMIT)?;
    let mut best = BruteAnswer {
        set: Vec::new(),
        value: 0.0,
    };
    for_each_subset(oracle.len(), |m| {
        let v = oracle.value(m);
        if v < best.value {
            best = BruteAnswer {
                set: elements_of(m),
                value: v,
            };
        }
    });
    Ok(best)
}

/// `max f(S)` over all subsets, `∅` included.
pub fn brute_max_value<F: SetFunction + ?Sized>(oracle: &F) -> Result<BruteAnswer> {
    check(oracle.len(), ENUMERATION_LIMIT)?;
    let mut best = BruteAnswer {
        set: Vec::new(),
        value: 0.0,
    };
    for_each_subset(oracle.len(), |m| {
        let v = oracle.value(m);
        if v > best.value {
            best = BruteAnswer {
                set: elements_of(m),
                value: v,
            };
        }
    });
    Ok(best)
}

fn extreme_ratio<F: SetFunction + ?Sized>(oracle: &F, maximize: bool) -> Result<RatioSolution> {
    check(oracle.len(), ENUMERATION_LIMIT)?;
    let mut best: Option<(f64, usize, Vec<bool>)> = None;
    for_each_subset(oracle.len(), |m| {
        let k = m.iter().filter(|&&b| b).count();
        if k == 0 {
            return;
        }
        let r = oracle.value(m) / k as f64;
        let better = match &best {
            None => true,
            Some((br, bk, _)) => {
                let strictly = if maximize { r > *br } else { r < *br };
                strictly || (r == *br && k > *bk)
            }
        };
        if better {
            best = Some((r, k, m.to_vec()));
        }
    });
    let (_, _, m) = best.expect("ground sets are nonempty");
    Ok(RatioSolution::new(elements_of(&m), oracle.value(&m)))
}

/// `max f(S)/|S|` over nonempty subsets; ties keep the largest set.
pub fn brute_max_ratio<F: SetFunction + ?Sized>(oracle: &F) -> Result<RatioSolution> {
    extreme_ratio(oracle, true)
}

/// `min f(S)/|S|` over nonempty subsets; ties keep the largest set.
pub fn brute_min_ratio<F: SetFunction + ?Sized>(oracle: &F) -> Result<RatioSolution> {
    extreme_ratio(oracle, false)
}

/// `&dyn` form of [`brute_max_ratio`], the shape expected by
/// [`crate::extract::dense_decomposition`].
pub fn brute_densest(oracle: &dyn SetFunction) -> Result<RatioSolution> {
    brute_max_ratio(oracle)
}

/// Exact subproblem for [`crate::extract::dinkelbach`]: a maximizer of
/// `den * f(S) - num * |S|` over subsets of the restriction.
pub fn brute_subproblem<F: SetFunction + ?Sized>(
    oracle: &F,
) -> impl FnMut(&[usize], Lambda) -> Result<Vec<usize>> + '_ {
    move |restriction, lambda| {
        check(restriction.len(), ENUMERATION_LIMIT)?;
        let n = oracle.len();
        let mut full = vec![false; n];
        let mut best = (0.0, Vec::new());
        for_each_subset(restriction.len(), |m| {
            for (&v, &b) in restriction.iter().zip(m) {
                full[v] = b;
            }
            let k = m.iter().filter(|&&b| b).count() as f64;
            let val = lambda.den * oracle.value(&full) - lambda.num * k;
            if val > best.0 {
                best = (val, elements_of(&full));
            }
        });
        Ok(best.1)
    }
}

/// The minimum-norm point of `B(f)` by a primal active-set method on
/// `min ||x||^2` subject to every base constraint.
///
/// Starts at a greedy vertex with its tight chain as the working set; each
/// step projects onto the working set's null space, stops at the first
/// blocking constraint, and releases the constraint with the most negative
/// multiplier once the projection vanishes.
pub fn brute_mnp<F: SetFunction + ?Sized>(oracle: &F) -> Result<Vec<f64>> {
    let n = oracle.len();
    check(n, QP_LIMIT)?;
    let full: u32 = (1u32 << n) - 1;
    let sign = oracle.orientation().sign();
    let values: Vec<f64> = (0..=full)
        .map(|bits| oracle.value(&(0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>()))
        .collect();
    let scale = 1.0 + values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let order: Vec<usize> = (0..n).collect();
    let mut x = DVector::from_vec(edmonds_greedy(oracle, &order)?.into_vec());
    // suffixes of the peel order are tight at the greedy vertex
    let mut working: Vec<u32> = (1..n).map(|j| order[j..].iter().fold(0u32, |b, &v| b | 1 << v)).collect();
    let row = |bits: u32, s: f64| (0..n).map(move |i| if bits >> i & 1 == 1 { s } else { 0.0 });
    let slack = |x: &DVector<f64>, bits: u32| {
        let xs: f64 = (0..n).filter(|&i| bits >> i & 1 == 1).map(|i| x[i]).sum();
        sign * (xs - values[bits as usize])
    };
    for _ in 0..100_000 {
        let k = working.len() + 1;
        let mut a = DMatrix::<f64>::zeros(k, n);
        for (r, &bits) in working.iter().enumerate() {
            for (c, v) in row(bits, sign).enumerate() {
                a[(r, c)] = v;
            }
        }
        for c in 0..n {
            a[(k - 1, c)] = 1.0;
        }
        let gram = &a * a.transpose();
        let rhs = &a * &x;
        let mu = gram
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Internal("singular working set".into()))?;
        let p = a.transpose() * &mu - &x;
        if p.amax() <= 1e-12 * scale {
            let (worst, &m) = match mu.as_slice()[..k - 1]
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.total_cmp(b.1))
            {
                Some(w) => w,
                None => return Ok(snap(oracle, &values, x.as_slice())),
            };
            if m >= -1e-10 * scale {
                return Ok(snap(oracle, &values, x.as_slice()));
            }
            working.remove(worst);
            continue;
        }
        let mut step = 1.0;
        let mut blocking = None;
        for bits in 1..full {
            if working.contains(&bits) {
                continue;
            }
            let ap: f64 = row(bits, sign).zip(p.iter()).map(|(r, v)| r * v).sum();
            if ap < -1e-14 * scale {
                let t = slack(&x, bits).max(0.0) / -ap;
                if t < step {
                    step = t;
                    blocking = Some(bits);
                }
            }
        }
        x += step * p;
        if let Some(bits) = blocking {
            working.push(bits);
        }
    }
    Err(Error::Internal("active-set iteration did not terminate".into()))
}

/// Replaces the QP answer by the point its level sets determine when that
/// point is feasible and no longer, which clears round-off from the solves.
fn snap<F: SetFunction + ?Sized>(oracle: &F, values: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let scale = 1.0 + x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let y = level_point(oracle, x, 1e-9 * scale);
    if x.iter().zip(&y).any(|(a, b)| (a - b).abs() > 1e-6 * scale) {
        return x.to_vec();
    }
    let sign = oracle.orientation().sign();
    let feasible = (1..values.len()).all(|bits| {
        let ys: f64 = (0..n).filter(|&i| bits >> i & 1 == 1).map(|i| y[i]).sum();
        sign * (ys - values[bits]) >= -1e-9 * scale
    });
    let norm = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>();
    if feasible && norm(&y) <= norm(x) + 1e-9 * scale * scale {
        y
    } else {
        x.to_vec()
    }
}
