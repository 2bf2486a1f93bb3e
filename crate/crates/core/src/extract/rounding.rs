use super::RatioSolution;
use crate::error::{Error, Result};
use crate::setfn::{lmo_order, prefix_values, Orientation, SetFunction, TraceObjective};

/// `{v : x_v <= lambda}`, ascending by index.
pub fn threshold_set(x: &[f64], lambda: f64) -> Vec<usize> {
    (0..x.len()).filter(|&v| x[v] <= lambda).collect()
}

/// Winner of a prefix scan.
#[derive(Debug, Clone, PartialEq)]
pub struct Extracted {
    /// Sorted ascending; empty only for [`TraceObjective::MinValue`].
    pub set: Vec<usize>,
    pub f_value: f64,
    /// `f(S)/|S|` for the ratio objectives, `f(S)` for the minimum value.
    pub objective: f64,
}

impl Extracted {
    pub fn into_ratio(self) -> RatioSolution {
        RatioSolution::new(self.set, self.f_value)
    }
}

/// Best prefix of `seq` under `objective`, given `values[i] = f(seq[..i])`.
/// Ties keep the shortest prefix.
pub(crate) fn scan_prefixes(seq: &[usize], values: &[f64], objective: TraceObjective) -> Extracted {
    debug_assert_eq!(values.len(), seq.len() + 1);
    let start = if objective == TraceObjective::MinValue { 0 } else { 1 };
    let mut best_i = start;
    let mut best = f64::NAN;
    for (i, &fv) in values.iter().enumerate().skip(start) {
        let obj = match objective {
            TraceObjective::MinValue => fv,
            _ => fv / i as f64,
        };
        if i == start || objective.improves(obj, best) {
            best = obj;
            best_i = i;
        }
    }
    let mut set = seq[..best_i].to_vec();
    set.sort_unstable();
    Extracted {
        set,
        f_value: values[best_i],
        objective: best,
    }
}

/// Scans the prefixes of `seq` (every prefix costs one shared peel).
pub fn best_prefix<F: SetFunction + ?Sized>(
    oracle: &F,
    seq: &[usize],
    objective: TraceObjective,
) -> Result<Extracted> {
    let values = prefix_values(oracle, seq)?;
    Ok(scan_prefixes(seq, &values, objective))
}

fn check_len<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<()> {
    if x.len() != oracle.len() {
        return Err(Error::InvalidParameter(format!(
            "point has length {}, ground set has {}",
            x.len(),
            oracle.len()
        )));
    }
    Ok(())
}

/// Prefix of the ascending sort of `x` minimizing `f(S)/|S|`.
pub fn best_prefix_sparse<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<RatioSolution> {
    check_len(oracle, x)?;
    let seq = lmo_order(Orientation::Supermodular, x);
    Ok(best_prefix(oracle, &seq, TraceObjective::SparseRatio)?.into_ratio())
}

/// Prefix of the descending sort of `x` maximizing `f(S)/|S|`.
pub fn best_prefix_dense<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<RatioSolution> {
    check_len(oracle, x)?;
    let seq = lmo_order(Orientation::Submodular, x);
    Ok(best_prefix(oracle, &seq, TraceObjective::DenseRatio)?.into_ratio())
}

/// Minimum of `f` over `∅` and the prefixes of the ascending sort of `x`.
pub fn sfm_extract<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<Extracted> {
    if oracle.orientation() != Orientation::Submodular {
        return Err(Error::Orientation(
            "minimization extraction needs a submodular oracle".into(),
        ));
    }
    check_len(oracle, x)?;
    let seq = lmo_order(Orientation::Supermodular, x);
    best_prefix(oracle, &seq, TraceObjective::MinValue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::testing::*;
    use crate::problems::{dsg_oracle, hnsn_oracle, mincut_oracle};
    use crate::setfn::{mask_of, negate};

    #[test]
    fn threshold_extremes() {
        let x = [0.5, -1.0, 2.0];
        assert_eq!(threshold_set(&x, f64::INFINITY), vec![0, 1, 2]);
        assert!(threshold_set(&x, f64::NEG_INFINITY).is_empty());
        assert_eq!(threshold_set(&x, 0.5), vec![0, 1]);
    }

    #[test]
    fn triangle_threshold_minimizes() {
        let k3 = clique(3);
        let f = dsg_oracle(&k3);
        let s = threshold_set(&[1.0; 3], 1.0);
        assert_eq!(s, vec![0, 1, 2]);
        let val = f.value(&mask_of(3, &s)) - s.len() as f64;
        let best = all_masks(3)
            .map(|m| f.value(&m) - m.iter().filter(|&&b| b).count() as f64)
            .fold(f64::NEG_INFINITY, f64::max);
        // f - |S| is maximized (dense side) at 0 by V and ∅ alike
        assert_eq!(val, 0.0);
        assert_eq!(best, 0.0);
    }

    #[test]
    fn dense_prefix_on_two_cliques() {
        let g = k5_k3();
        let f = dsg_oracle(&g);
        let x = [2.0, 2.0, 2.0, 2.0, 2.0, 1.0, 1.0, 1.0];
        let s = best_prefix_dense(&f, &x).unwrap();
        assert_eq!(s.set, vec![0, 1, 2, 3, 4]);
        assert_eq!(s.ratio, 2.0);
    }

    #[test]
    fn dense_prefix_on_path_is_everything() {
        let g = path3();
        let f = dsg_oracle(&g);
        let s = best_prefix_dense(&f, &[2.0 / 3.0; 3]).unwrap();
        assert_eq!(s.set, vec![0, 1, 2]);
        assert!((s.ratio - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sparse_prefix_on_negated_hnsn_toy() {
        let b = hnsn_toy();
        let f = hnsn_oracle(&b);
        let neg = negate(&f);
        // minimum-norm point of B(-f) is (-3, -1)
        let s = best_prefix_sparse(&neg, &[-3.0, -1.0]).unwrap();
        assert_eq!(s.set, vec![0]);
        let brute = all_masks(2)
            .filter(|m| m.iter().any(|&b| b))
            .map(|m| neg.value(&m) / m.iter().filter(|&&b| b).count() as f64)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(s.ratio, brute);
        assert_eq!(s.ratio, -3.0);
    }

    #[test]
    fn sfm_on_diamond_matches_flow() {
        let fi = diamond();
        let g = mincut_oracle(&fi).unwrap();
        let x = [0.0, 0.0];
        let e = sfm_extract(&g, &x).unwrap();
        assert_eq!(g.source_cut() + e.f_value, crate::flow::edmonds_karp(&fi).value);
    }

    #[test]
    fn sfm_rejects_supermodular_and_prefers_empty() {
        let g = clique(3);
        assert!(matches!(
            sfm_extract(&dsg_oracle(&g), &[0.0; 3]),
            Err(Error::Orientation(_))
        ));
        let b = hnsn_toy();
        let e = sfm_extract(&negate(negate(hnsn_oracle(&b))), &[1.0, 2.0]);
        assert!(e.is_err());
        let e = sfm_extract(&crate::problems::mincut_oracle(&diamond()).unwrap(), &[5.0, 5.0]).unwrap();
        assert!(e.set.is_empty());
        assert_eq!(e.f_value, 0.0);
    }
}
