use super::{lmo_with_order, Progress, SolveOutcome, Tracker};
use crate::error::Result;
use crate::setfn::base::{dot, duality_gap, level_point};
use crate::setfn::{BasePoint, SetFunction, SolverConfig};

/// Fujishige-Wolfe minimum-norm point.
///
/// Keeps `x` as a convex combination of affinely independent vertices.
/// A major cycle adds the LMO vertex; minor cycles move to the affine
/// minimizer of the active set, or towards it until a weight hits zero and
/// that vertex leaves. The affine minimizer is `α ∝ M^{-1} 1` with
/// `M = QᵀQ + 11ᵀ`, whose Cholesky factor is updated as vertices come and go.
pub fn fujishige_wolfe<F: SetFunction + ?Sized>(oracle: &F, cfg: &SolverConfig) -> Result<SolveOutcome> {
    run(oracle, cfg, |_| false)
}

/// Lower-triangular `L` with `L Lᵀ = M`, stored by rows.
struct Cholesky {
    rows: Vec<Vec<f64>>,
}

impl Cholesky {
    /// Appends a row and column with off-diagonal `m` and diagonal `d`.
    /// Fails when the new pivot is (numerically) zero.
    fn push(&mut self, m: &[f64], d: f64) -> bool {
        let k = self.rows.len();
        let mut r = vec![0.0; k + 1];
        for i in 0..k {
            let s: f64 = (0..i).map(|j| self.rows[i][j] * r[j]).sum();
            r[i] = (m[i] - s) / self.rows[i][i];
        }
        let pivot = d - r[..k].iter().map(|v| v * v).sum::<f64>();
        if pivot <= 1e-12 * d.abs().max(1.0) {
            return false;
        }
        r[k] = pivot.sqrt();
        for row in &mut self.rows {
            row.push(0.0);
        }
        self.rows.push(r);
        true
    }

    /// Deletes row and column `i`, restoring triangularity with Givens
    /// rotations on adjacent columns.
    fn remove(&mut self, i: usize) {
        self.rows.remove(i);
        let k = self.rows.len();
        for j in i..k {
            let (a, b) = (self.rows[j][j], self.rows[j][j + 1]);
            let rho = a.hypot(b);
            let (c, s) = if rho == 0.0 { (1.0, 0.0) } else { (a / rho, b / rho) };
            for r in j..k {
                let (p, q) = (self.rows[r][j], self.rows[r][j + 1]);
                self.rows[r][j] = c * p + s * q;
                self.rows[r][j + 1] = -s * p + c * q;
            }
        }
        for row in &mut self.rows {
            row.pop();
        }
    }

    /// Solves `L Lᵀ z = 1`.
    fn solve_ones(&self) -> Vec<f64> {
        let k = self.rows.len();
        let mut y = vec![0.0; k];
        for i in 0..k {
            let s: f64 = (0..i).map(|j| self.rows[i][j] * y[j]).sum();
            y[i] = (1.0 - s) / self.rows[i][i];
        }
        let mut z = vec![0.0; k];
        for i in (0..k).rev() {
            let s: f64 = (i + 1..k).map(|j| self.rows[j][i] * z[j]).sum();
            z[i] = (y[i] - s) / self.rows[i][i];
        }
        z
    }
}

struct Active {
    vertices: Vec<Vec<f64>>,
    weights: Vec<f64>,
    chol: Cholesky,
}

impl Active {
    fn try_add(&mut self, q: Vec<f64>) -> bool {
        let m: Vec<f64> = self.vertices.iter().map(|p| dot(p, &q) + 1.0).collect();
        let d = dot(&q, &q) + 1.0;
        if !self.chol.push(&m, d) {
            return false;
        }
        self.vertices.push(q);
        self.weights.push(0.0);
        true
    }

    fn remove(&mut self, i: usize) {
        self.vertices.remove(i);
        self.weights.remove(i);
        self.chol.remove(i);
    }

    fn point(&self, n: usize) -> Vec<f64> {
        let mut x = vec![0.0; n];
        for (p, &w) in self.vertices.iter().zip(&self.weights) {
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi += w * pi;
            }
        }
        x
    }

    /// Minor cycles: move to the affine minimizer if it lies in the convex
    /// hull, otherwise step to the hull boundary and drop vertices.
    fn minor_cycles(&mut self, drop_tol: f64) {
        loop {
            let z = self.chol.solve_ones();
            let total: f64 = z.iter().sum();
            let alpha: Vec<f64> = z.iter().map(|v| v / total).collect();
            if alpha.iter().all(|&a| a > drop_tol) {
                self.weights = alpha;
                return;
            }
            let mut closest: Option<(f64, usize)> = None;
            for (i, (&a, &l)) in alpha.iter().zip(&self.weights).enumerate() {
                if a <= drop_tol && a < l {
                    let t = l / (l - a);
                    if closest.is_none_or(|(best, _)| t < best) {
                        closest = Some((t, i));
                    }
                }
            }
            let (theta, blocking) = match closest {
                Some((t, i)) => (t.min(1.0), Some(i)),
                None => (1.0, None),
            };
            for (l, &a) in self.weights.iter_mut().zip(&alpha) {
                *l = theta * a + (1.0 - theta) * *l;
            }
            if let Some(i) = blocking {
                self.weights[i] = 0.0;
            }
            let mut i = self.weights.len();
            while i > 0 {
                i -= 1;
                if self.weights[i] <= drop_tol && self.weights.len() > 1 {
                    self.remove(i);
                }
            }
            let s: f64 = self.weights.iter().sum();
            for l in &mut self.weights {
                *l /= s;
            }
            if self.weights.len() == 1 {
                self.weights[0] = 1.0;
                return;
            }
        }
    }
}

pub(super) fn run<F, O>(oracle: &F, cfg: &SolverConfig, observer: O) -> Result<SolveOutcome>
where
    F: SetFunction + ?Sized,
    O: FnMut(&Progress<'_>) -> bool,
{
    let mut tracker = Tracker::new(oracle, cfg, observer)?;
    let n = oracle.len();
    let (q0, order) = lmo_with_order(oracle, &vec![0.0; n])?;
    tracker.offer_peel(&q0, &order);
    let f_of_v = q0.f_of_v();
    let mut active = Active {
        vertices: Vec::new(),
        weights: Vec::new(),
        chol: Cholesky { rows: Vec::new() },
    };
    let ok = active.try_add(q0.into_vec());
    debug_assert!(ok);
    active.weights[0] = 1.0;
    let mut x = active.point(n);
    let mut k = 0;
    loop {
        let (q, order) = lmo_with_order(oracle, &x)?;
        let norm = dot(&x, &x);
        let gap = norm - dot(q.x(), &x);
        tracker.offer_peel(&q, &order);
        tracker.record(k, &BasePoint::new(x.clone(), f_of_v), Some(gap));
        let numerically_done = gap <= 1e-12 * norm.max(1.0);
        if numerically_done {
            if let Some((y, g)) = polish(oracle, &x, gap)? {
                tracker.replace_point(&BasePoint::new(y, f_of_v), g);
            }
        }
        if tracker.should_stop() || numerically_done || k == cfg.max_iters {
            break;
        }
        if active.vertices.iter().any(|p| p.as_slice() == q.x()) {
            break;
        }
        // an affinely dependent vertex cannot improve on the affine
        // minimizer; the factor rejects it and the run ends
        if !active.try_add(q.into_vec()) {
            break;
        }
        k += 1;
        active.minor_cycles(cfg.tolerances.drop);
        x = active.point(n);
        debug_assert!(active.vertices.len() <= n + 1);
    }
    Ok(tracker.finish(k))
}

/// Snaps a converged iterate onto the point its level sets determine,
/// keeping it only if it stays close to `x` and its gap is no worse. This
/// removes the last few ulps of error the affine solves leave behind.
fn polish<F: SetFunction + ?Sized>(oracle: &F, x: &[f64], gap: f64) -> Result<Option<(Vec<f64>, f64)>> {
    let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let y = level_point(oracle, x, 1e-9 * scale);
    let close = x.iter().zip(&y).all(|(a, b)| (a - b).abs() <= 1e-6 * scale);
    if !close || y == x {
        return Ok(None);
    }
    let g = duality_gap(oracle, &y)?;
    Ok((g <= gap.max(0.0)).then_some((y, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::testing::*;
    use crate::problems::{dsg_oracle, hnsn_oracle};
    use crate::setfn::negate;

    #[test]
    fn triangle_reaches_the_uniform_point() {
        let g = clique(3);
        let out = fujishige_wolfe(&dsg_oracle(&g), &SolverConfig::with_iters(50)).unwrap();
        for &v in out.point.x() {
            assert!((v - 1.0).abs() < 1e-12);
        }
        assert!(out.gap <= 1e-12);
        assert!(out.iterations <= 5);
    }

    #[test]
    fn cliques_land_on_the_uniform_point_exactly() {
        for n in 2..=12 {
            let out = fujishige_wolfe(&dsg_oracle(&clique(n)), &SolverConfig::with_iters(100)).unwrap();
            assert!(out.point.x().iter().all(|&v| v == (n as f64 - 1.0) / 2.0), "K{n}: {:?}", out.point.x());
        }
    }

    #[test]
    fn two_cliques_exact() {
        let g = k5_k3();
        let out = fujishige_wolfe(&dsg_oracle(&g), &SolverConfig::with_iters(100)).unwrap();
        let expect = [2.0, 2.0, 2.0, 2.0, 2.0, 1.0, 1.0, 1.0];
        for (a, b) in out.point.x().iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{:?}", out.point.x());
        }
    }

    #[test]
    fn cholesky_update_and_downdate() {
        let vs = [vec![1.0, 2.0, 0.0], vec![0.0, 1.0, 3.0], vec![2.0, 0.0, 1.0], vec![1.0, 1.0, 1.0]];
        let mut c = Cholesky { rows: Vec::new() };
        for (i, v) in vs.iter().enumerate() {
            let m: Vec<f64> = vs[..i].iter().map(|p| dot(p, v) + 1.0).collect();
            assert!(c.push(&m, dot(v, v) + 1.0));
        }
        c.remove(1);
        let kept = [&vs[0], &vs[2], &vs[3]];
        for i in 0..3 {
            for j in 0..3 {
                let lhs: f64 = (0..3).map(|t| c.rows[i][t] * c.rows[j][t]).sum();
                assert!((lhs - (dot(kept[i], kept[j]) + 1.0)).abs() < 1e-12);
            }
            for t in i + 1..3 {
                assert_eq!(c.rows[i][t], 0.0);
            }
        }
        // a repeated vertex is affinely dependent
        let m: Vec<f64> = kept.iter().map(|p| dot(p, &vs[0]) + 1.0).collect();
        assert!(!c.push(&m, dot(&vs[0], &vs[0]) + 1.0));
    }

    #[test]
    fn submodular_and_random_instances_converge() {
        for seed in 0..10 {
            let b = random_bipartite(9, 12, seed);
            let f = negate(hnsn_oracle(&b));
            let out = fujishige_wolfe(&f, &SolverConfig::with_iters(500).with_eps(1e-7)).unwrap();
            assert!(out.gap <= 1e-12 * out.point.norm_sq().max(1.0) + 1e-14, "seed {seed}: {}", out.gap);
            let g = random_weighted_graph(10, 0.4, seed);
            let out = fujishige_wolfe(&dsg_oracle(&g), &SolverConfig::with_iters(500)).unwrap();
            assert!(out.gap <= 1e-9, "seed {seed}: {}", out.gap);
        }
    }
}
