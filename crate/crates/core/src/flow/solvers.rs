use super::networks::{hnsn_sink_side, DensityInstance};
use super::MaxFlowEngine;
use crate::error::{Error, Result};
use crate::extract::{dinkelbach, Decomposition, Block, Lambda, RatioSolution};
use crate::problems::{hnsn_oracle, AnchorSet, MembershipInstance, UndirectedGraph, WeightedBipartiteGraph};
use crate::setfn::SetFunction;

/// Result of an exact flow-based ratio solve.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowSolve {
    pub solution: RatioSolution,
    /// `λ_k` of every accepted round.
    pub lambdas: Vec<f64>,
    /// Max-flow computations performed.
    pub flow_calls: usize,
}

/// Densest set of `F(S) = a w(E(S)) + c(S)` by density improvement, each
/// round cutting the induced sub-instance of the previous set.
pub fn flow_density_solver(inst: &DensityInstance, engine: MaxFlowEngine) -> Result<FlowSolve> {
    let run = dinkelbach(inst, |restriction, lambda| {
        let sub = inst.restrict(restriction)?;
        let (set, _) = sub.max_gain_set(lambda, engine, None);
        Ok(set.into_iter().map(|i| restriction[i]).collect())
    })?;
    Ok(FlowSolve {
        solution: run.solution,
        lambdas: run.lambdas,
        flow_calls: run.calls,
    })
}

/// Exact densest subgraph.
pub fn flow_dsg_solver(g: &UndirectedGraph) -> Result<FlowSolve> {
    flow_density_solver(&DensityInstance::dsg(g), MaxFlowEngine::PushRelabel)
}

/// Exact anchored densest subgraph.
pub fn flow_anchored_solver(g: &UndirectedGraph, anchor: &AnchorSet, engine: MaxFlowEngine) -> Result<FlowSolve> {
    flow_density_solver(&DensityInstance::anchored(g, anchor), engine)
}

/// Exact maximizer of `w(N̄(S))/|S|` over nonempty `S ⊆ L`.
pub fn flow_hnsn_solver(b: &WeightedBipartiteGraph) -> Result<FlowSolve> {
    flow_hnsn_solver_with(b, MaxFlowEngine::PushRelabel)
}

pub fn flow_hnsn_solver_with(b: &WeightedBipartiteGraph, engine: MaxFlowEngine) -> Result<FlowSolve> {
    let oracle = hnsn_oracle(b);
    let run = dinkelbach(&oracle, |restriction, lambda| {
        match sub_bipartite(b, restriction)? {
            Some(sub) => Ok(hnsn_sink_side(&sub, lambda, engine)
                .into_iter()
                .map(|i| restriction[i])
                .collect()),
            None => Ok(Vec::new()),
        }
    })?;
    Ok(FlowSolve {
        solution: run.solution,
        lambdas: run.lambdas,
        flow_calls: run.calls,
    })
}

/// The instance on left vertices `kept`, keeping only right vertices whose
/// whole neighbourhood survives; `None` if none does.
fn sub_bipartite(b: &WeightedBipartiteGraph, kept: &[usize]) -> Result<Option<WeightedBipartiteGraph>> {
    let mut index = vec![usize::MAX; b.left()];
    for (i, &u) in kept.iter().enumerate() {
        index[u] = i;
    }
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    for v in 0..b.right() {
        if b.delta(v).iter().all(|&u| index[u] != usize::MAX) {
            let id = weights.len();
            weights.push(b.weight(v));
            edges.extend(b.delta(v).iter().map(|&u| (index[u], id)));
        }
    }
    if weights.is_empty() {
        return Ok(None);
    }
    WeightedBipartiteGraph::new(kept.len(), weights, edges).map(Some)
}

/// Dense decomposition by repeated exact densest-set solves on contracted
/// instances.
pub fn flow_dense_decomposition(inst: &DensityInstance, engine: MaxFlowEngine) -> Result<Decomposition> {
    let n = inst.len();
    let mut done: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    while done.len() < n {
        let (sub, kept) = inst.contract(&done)?;
        let sol = flow_density_solver(&sub, engine)?.solution;
        let elements: Vec<usize> = sol.set.iter().map(|&i| kept[i]).collect();
        done.extend(&elements);
        blocks.push(Block {
            elements,
            level: sol.ratio,
        });
    }
    let mut d = Decomposition { blocks };
    d.merge_ties(inst);
    Ok(d)
}

/// A densest subgraph of minimum size: the smallest among, for each vertex
/// `v`, the least maximizer of `|E(S)| - λ*|S|` containing `v`. Ties go to
/// the lowest forced vertex.
pub fn minimal_densest_subgraph(g: &UndirectedGraph) -> Result<RatioSolution> {
    let inst = DensityInstance::dsg(g);
    let densest = flow_density_solver(&inst, MaxFlowEngine::PushRelabel)?.solution;
    let lambda = Lambda {
        num: densest.f_value,
        den: densest.len() as f64,
    };
    let tol = 1e-9 * (1.0 + lambda.num.abs() * g.n() as f64);
    let mut best = densest;
    for v in 0..g.n() {
        let (set, gain) = inst.max_gain_set(lambda, MaxFlowEngine::PushRelabel, Some(v));
        if gain >= -tol && set.len() < best.len() {
            let f = inst.value(&crate::setfn::mask_of(g.n(), &set));
            best = RatioSolution::new(set, f);
        }
    }
    Ok(best)
}

/// `max_S w(E(S)) - y(S)` and a maximizer, by one minimum cut.
pub fn membership_max_violation(mi: &MembershipInstance, engine: MaxFlowEngine) -> Result<(f64, Vec<usize>)> {
    if mi.y.len() != mi.graph.n() {
        return Err(Error::InvalidParameter("membership vector has the wrong length".into()));
    }
    let inst = DensityInstance::membership(mi);
    let (set, gain) = inst.max_gain_set(Lambda { num: 0.0, den: 1.0 }, engine, None);
    Ok((gain, set))
}
