use super::graph::{MembershipInstance, UndirectedGraph};
use crate::error::{Error, Result};
use crate::extract::RatioSolution;
use crate::flow::minimal_densest_subgraph;

/// A point of `B(|E(.)|)` built from a smallest exact densest subgraph `S*`
/// of density `λ*`: vertices of `S*` get `λ*`; each edge leaving `S*` gives its
/// weight to the outside endpoint; each edge outside `S*` splits evenly.
pub fn densest_base_vector(g: &UndirectedGraph) -> Result<(Vec<f64>, RatioSolution)> {
    let densest = minimal_densest_subgraph(g)?;
    let mut inside = vec![false; g.n()];
    for &v in &densest.set {
        inside[v] = true;
    }
    let mut b = vec![0.0; g.n()];
    for &v in &densest.set {
        b[v] = densest.ratio;
    }
    for &(u, v, w) in g.edges() {
        match (inside[u], inside[v]) {
            (true, true) => {}
            (false, false) => {
                b[u] += w / 2.0;
                b[v] += w / 2.0;
            }
            (true, false) => b[v] += w,
            (false, true) => b[u] += w,
        }
    }
    Ok((b, densest))
}

#[derive(Debug, Clone)]
pub struct PerturbedMembership {
    pub instance: MembershipInstance,
    /// The densest set whose inequality the perturbation breaks.
    pub densest: RatioSolution,
    /// `(u, w)`: `y_u` lowered and `y_w` raised by `eps`.
    pub moved: (usize, usize),
}

/// Shifts `eps` of mass from the smallest vertex of `S*` to the smallest
/// vertex outside it, so that `y(S*) = f(S*) - eps` while `y(V) = f(V)`.
pub fn perturb_membership(g: &UndirectedGraph, eps: f64) -> Result<PerturbedMembership> {
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "perturbation must be positive, got {eps}"
        )));
    }
    let (mut b, densest) = densest_base_vector(g)?;
    let mut inside = vec![false; g.n()];
    for &v in &densest.set {
        inside[v] = true;
    }
    let u = densest.set[0];
    let w = (0..g.n()).find(|&v| !inside[v]).ok_or_else(|| {
        Error::Precondition("densest subgraph is the whole graph; no vertex to receive the perturbation".into())
    })?;
    b[u] -= eps;
    b[w] += eps;
    Ok(PerturbedMembership {
        instance: MembershipInstance::new(g.clone(), b)?,
        densest,
        moved: (u, w),
    })
}
