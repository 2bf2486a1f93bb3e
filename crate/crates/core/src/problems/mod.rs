//! Graph structures and the concrete set-function oracles built on them.

mod degree;
mod graph;
mod hnsn;
pub mod io;
mod membership;
mod mincut;
mod pmean;

pub use degree::{
    anchored_oracle, dsg_oracle, membership_oracle, AnchoredOracle, DsgOracle, MembershipOracle,
};
pub use graph::{AnchorSet, MembershipInstance, UndirectedGraph, WeightedBipartiteGraph};
pub use hnsn::{hnsn_oracle, HnsnOracle};
pub use membership::{densest_base_vector, perturb_membership, PerturbedMembership};
pub use mincut::{mincut_oracle, MincutOracle};
pub use pmean::{pmean_oracle, PMeanOracle};

pub use crate::flow::FlowInstance;
