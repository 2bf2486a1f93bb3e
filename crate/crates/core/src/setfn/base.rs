use super::{value_of, Orientation, SetFunction};
use crate::error::{Error, Result};

/// A point `x` of `R^V` tagged with `f(V)`; a member (or candidate member)
/// of the base polytope `B(f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePoint {
    x: Vec<f64>,
    f_of_v: f64,
}

impl BasePoint {
    pub fn new(x: Vec<f64>, f_of_v: f64) -> Self {
        BasePoint { x, f_of_v }
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.x
    }

    pub fn f_of_v(&self) -> f64 {
        self.f_of_v
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.x.iter().sum()
    }

    pub fn norm_sq(&self) -> f64 {
        dot(&self.x, &self.x)
    }

    /// `|x(V) - f(V)| <= tol`.
    pub fn is_balanced(&self, tol: f64) -> bool {
        (self.sum() - self.f_of_v).abs() <= tol
    }

    pub fn negated(&self) -> BasePoint {
        BasePoint {
            x: self.x.iter().map(|v| -v).collect(),
            f_of_v: -self.f_of_v,
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidParameter(format!(
            "peel order has {} entries, ground set has {n}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParameter(format!(
                "peel order is not a permutation (element {v})"
            )));
        }
    }
    Ok(())
}

/// Edmonds' greedy vertex: peel `order[0]` first from `V`, assigning each
/// element its marginal of removal at the moment it leaves.
pub fn edmonds_greedy<F: SetFunction + ?Sized>(oracle: &F, order: &[usize]) -> Result<BasePoint> {
    let n = oracle.len();
    check_permutation(order, n)?;
    let mut peeler = oracle.peeler();
    let mut x = vec![0.0; n];
    let mut touched = Vec::new();
    for &v in order {
        x[v] = peeler.marginal(v);
        touched.clear();
        peeler.remove(v, &mut touched);
    }
    let f_of_v = oracle.value(&vec![true; n]);
    Ok(BasePoint::new(x, f_of_v))
}

/// Peel order realizing the linear minimization oracle at `x`.
///
/// For a supermodular `f`, marginals grow with the context, so the element
/// peeled first receives the largest entry; minimizing `<d, x>` therefore
/// peels in ascending `x`. Submodular functions peel in descending `x`.
/// Ties go to the smaller index.
pub fn lmo_order(orientation: Orientation, x: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..x.len()).collect();
    match orientation {
        Orientation::Supermodular => order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b))),
        Orientation::Submodular => order.sort_by(|&a, &b| x[b].total_cmp(&x[a]).then(a.cmp(&b))),
    }
    order
}

/// Vertex `d` of `B(f)` minimizing `<d, x>`.
pub fn lmo<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<BasePoint> {
    if x.len() != oracle.len() {
        return Err(Error::InvalidParameter(format!(
            "direction has length {}, ground set has {}",
            x.len(),
            oracle.len()
        )));
    }
    edmonds_greedy(oracle, &lmo_order(oracle.orientation(), x))
}

/// `||x||^2 - min_{q ∈ B(f)} <q, x>`; zero exactly at the minimum-norm point.
pub fn duality_gap<F: SetFunction + ?Sized>(oracle: &F, x: &[f64]) -> Result<f64> {
    duality_gap_with_vertex(oracle, x).map(|(g, _)| g)
}

/// As [`duality_gap`], also returning the minimizing vertex.
pub fn duality_gap_with_vertex<F: SetFunction + ?Sized>(
    oracle: &F,
    x: &[f64],
) -> Result<(f64, BasePoint)> {
    let q = lmo(oracle, x)?;
    Ok((dot(x, x) - dot(q.x(), x), q))
}

/// The point whose levels are the averaged marginals of the level sets of
/// `x`.
///
/// At the minimum-norm point every upper level set (lower, for submodular
/// `f`) is tight, so a level equals `f(S_k) - f(S_{k-1})` spread over its
/// members. Coordinates within `tol` of their neighbour in sorted order
/// share a level. Feeding in a point that is the minimum-norm point up to
/// round-off returns it with every level computed straight from `f`.
pub(crate) fn level_point<F: SetFunction + ?Sized>(oracle: &F, x: &[f64], tol: f64) -> Vec<f64> {
    let n = x.len();
    let mut order = lmo_order(oracle.orientation(), x);
    order.reverse();
    let mut y = vec![0.0; n];
    let mut prefix: Vec<usize> = Vec::with_capacity(n);
    let mut before = 0.0;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (x[order[end]] - x[order[end - 1]]).abs() <= tol {
            end += 1;
        }
        prefix.extend_from_slice(&order[start..end]);
        let after = value_of(oracle, &prefix);
        let level = (after - before) / (end - start) as f64;
        for &v in &order[start..end] {
            y[v] = level;
        }
        before = after;
        start = end;
    }
    y
}

/// `f` on every prefix of `order`: entry `i` is `f({order[0], .., order[i-1]})`.
///
/// Computed by one greedy pass peeling `order` back to front, so all `n + 1`
/// values cost a single peel.
pub fn prefix_values<F: SetFunction + ?Sized>(oracle: &F, order: &[usize]) -> Result<Vec<f64>> {
    let reversed: Vec<usize> = order.iter().rev().copied().collect();
    let d = edmonds_greedy(oracle, &reversed)?;
    let mut out = Vec::with_capacity(order.len() + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for &v in order {
        acc += d.x()[v];
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;
    use crate::setfn::{negate, GroundSet};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn greedy_on_triangle() {
        let k3 = EdgeCount::clique(3);
        let d = edmonds_greedy(&k3, &[0, 1, 2]).unwrap();
        assert_eq!(d.x(), &[2.0, 1.0, 0.0]);
        assert_eq!(d.sum(), 3.0);
        assert_eq!(d.f_of_v(), 3.0);
    }

    #[test]
    fn greedy_on_path_centre_first() {
        // a=0, b=1, c=2; edges a-b, b-c
        let path = EdgeCount::new(3, &[(0, 1), (1, 2)]);
        let d = edmonds_greedy(&path, &[1, 0, 2]).unwrap();
        assert_eq!(d.x(), &[0.0, 2.0, 0.0]);
    }

    #[test]
    fn greedy_singleton() {
        struct Const(GroundSet);
        impl SetFunction for Const {
            fn ground(&self) -> &GroundSet {
                &self.0
            }
            fn orientation(&self) -> Orientation {
                Orientation::Submodular
            }
            fn eval(&self, _: &[bool]) -> f64 {
                -4.5
            }
        }
        let c = Const(GroundSet::new(1).unwrap());
        assert_eq!(edmonds_greedy(&c, &[0]).unwrap().x(), &[-4.5]);
        assert_eq!(duality_gap(&c, &[-4.5]).unwrap(), 0.0);
    }

    #[test]
    fn greedy_rejects_non_permutations() {
        let k3 = EdgeCount::clique(3);
        assert!(edmonds_greedy(&k3, &[0, 0, 1]).is_err());
        assert!(edmonds_greedy(&k3, &[0, 1]).is_err());
        assert!(edmonds_greedy(&k3, &[0, 1, 3]).is_err());
    }

    #[test]
    fn lmo_at_zero_is_index_order_vertex() {
        let k3 = EdgeCount::clique(3);
        assert_eq!(lmo(&k3, &[0.0; 3]).unwrap().x(), &[2.0, 1.0, 0.0]);
    }

    #[test]
    fn lmo_matches_enumeration_on_triangle() {
        let k3 = EdgeCount::clique(3);
        let x = [0.0, 0.0, 10.0];
        let d = lmo(&k3, &x).unwrap();
        let best = permutations(3)
            .iter()
            .map(|p| dot(edmonds_greedy(&k3, p).unwrap().x(), &x))
            .fold(f64::INFINITY, f64::min);
        assert_eq!(dot(d.x(), &x), best);
        assert_eq!(d.x()[2], 0.0);
    }

    #[test]
    fn lmo_minimizes_for_both_orientations() {
        let g = EdgeCount::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 4)]);
        let neg = negate(&g);
        let x = [0.3, -1.0, 2.5, 0.3, -0.7];
        let perms = permutations(5);
        for oracle in [&g as &dyn SetFunction, &neg] {
            let got = dot(lmo(oracle, &x).unwrap().x(), &x);
            let best = perms
                .iter()
                .map(|p| dot(edmonds_greedy(oracle, p).unwrap().x(), &x))
                .fold(f64::INFINITY, f64::min);
            assert!((got - best).abs() < 1e-12, "{got} vs {best}");
        }
    }

    #[test]
    fn gap_zero_at_uniform_point_of_clique() {
        let k4 = EdgeCount::clique(4);
        assert_eq!(duality_gap(&k4, &[1.5; 4]).unwrap(), 0.0);
    }

    #[test]
    fn gap_at_triangle_vertex() {
        let k3 = EdgeCount::clique(3);
        let x = [2.0, 1.0, 0.0];
        let min_inner = permutations(3)
            .iter()
            .map(|p| dot(edmonds_greedy(&k3, p).unwrap().x(), &x))
            .fold(f64::INFINITY, f64::min);
        assert_eq!(min_inner, 1.0);
        assert_eq!(duality_gap(&k3, &x).unwrap(), 5.0 - min_inner);
    }

    #[test]
    fn prefix_values_match_direct_evaluation() {
        let g = EdgeCount::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]);
        let order = [3, 0, 4, 2, 1];
        let pv = prefix_values(&g, &order).unwrap();
        for i in 0..=5 {
            let mask = crate::setfn::mask_of(5, &order[..i]);
            assert_eq!(pv[i], g.value(&mask));
        }
    }
}
