//! Maximum flow (push-relabel and Edmonds-Karp) and the exact flow-based
//! ratio solvers.

mod dimacs;
mod edmonds_karp;
mod network;
mod networks;
mod push_relabel;
mod residual;
mod solvers;

pub use dimacs::{parse_dimacs, read_dimacs, write_dimacs};
pub use edmonds_karp::edmonds_karp;
pub use network::{FlowArc, FlowInstance};
pub use networks::{dsg_cut_network, hnsn_cut_network, hnsn_phi_minimizer, DensityInstance};
pub use push_relabel::push_relabel;
pub use solvers::{
    flow_anchored_solver, flow_dense_decomposition, flow_density_solver, flow_dsg_solver,
    flow_hnsn_solver, flow_hnsn_solver_with, membership_max_violation, minimal_densest_subgraph,
    FlowSolve,
};

/// Maximum flow with the minimal minimum cut.
#[derive(Debug, Clone, PartialEq)]
pub struct CutResult {
    pub value: f64,
    /// Nodes reachable from the source in the final residual graph.
    pub source_side: Vec<bool>,
    /// Flow on each arc, in arc order.
    pub flows: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaxFlowEngine {
    #[default]
    PushRelabel,
    EdmondsKarp,
}

impl MaxFlowEngine {
    pub fn run(self, fi: &FlowInstance) -> CutResult {
        match self {
            MaxFlowEngine::PushRelabel => push_relabel(fi),
            MaxFlowEngine::EdmondsKarp => edmonds_karp(fi),
        }
    }
}
