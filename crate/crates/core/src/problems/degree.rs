//! Oracles whose removal marginal is `scale * deg_S(v) + offset(v)`:
//! densest subgraph, anchored density and contrapolymatroid membership.

use super::graph::{AnchorSet, MembershipInstance, UndirectedGraph};
use crate::setfn::{GroundSet, Orientation, Peeler, SetFunction};

/// `f(S) = scale * w(E(S)) + offset(S)` for a supermodular edge-count term
/// plus a modular term.
struct EdgeModular<'g> {
    graph: &'g UndirectedGraph,
    ground: GroundSet,
    scale: f64,
    offset: Option<Vec<f64>>,
}

impl<'g> EdgeModular<'g> {
    fn new(graph: &'g UndirectedGraph, scale: f64, offset: Option<Vec<f64>>) -> Self {
        EdgeModular {
            graph,
            ground: GroundSet::new(graph.n()).expect("graphs have at least one vertex"),
            scale,
            offset,
        }
    }

    fn offset(&self, v: usize) -> f64 {
        self.offset.as_ref().map_or(0.0, |o| o[v])
    }

    fn eval(&self, members: &[bool]) -> f64 {
        let mut total = self.scale * self.graph.induced_weight(members);
        if let Some(o) = &self.offset {
            total += members
                .iter()
                .zip(o)
                .filter(|(&b, _)| b)
                .map(|(_, &c)| c)
                .sum::<f64>();
        }
        total
    }

    fn marginal(&self, v: usize, members: &[bool]) -> f64 {
        let deg: f64 = self
            .graph
            .neighbors(v)
            .filter(|&(u, _)| members[u])
            .map(|(_, w)| w)
            .sum();
        self.scale * deg + self.offset(v)
    }

    fn peeler(&self) -> DegreePeeler<'_> {
        DegreePeeler {
            graph: self.graph,
            alive: vec![true; self.graph.n()],
            deg: (0..self.graph.n())
                .map(|v| self.graph.weighted_degree(v))
                .collect(),
            scale: self.scale,
            offset: self.offset.as_deref(),
        }
    }
}

struct DegreePeeler<'a> {
    graph: &'a UndirectedGraph,
    alive: Vec<bool>,
    deg: Vec<f64>,
    scale: f64,
    offset: Option<&'a [f64]>,
}

impl Peeler for DegreePeeler<'_> {
    fn marginal(&mut self, v: usize) -> f64 {
        self.scale * self.deg[v] + self.offset.map_or(0.0, |o| o[v])
    }

    fn remove(&mut self, v: usize, touched: &mut Vec<usize>) {
        self.alive[v] = false;
        for (u, w) in self.graph.neighbors(v) {
            if self.alive[u] {
                self.deg[u] -= w;
                touched.push(u);
            }
        }
    }
}

macro_rules! edge_modular_oracle {
    ($ty:ident) => {
        impl SetFunction for $ty<'_> {
            fn ground(&self) -> &GroundSet {
                &self.inner.ground
            }
            fn orientation(&self) -> Orientation {
                Orientation::Supermodular
            }
            fn eval(&self, members: &[bool]) -> f64 {
                self.inner.eval(members)
            }
            fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
                self.inner.marginal(v, members)
            }
            fn peeler(&self) -> Box<dyn Peeler + '_> {
                Box::new(self.inner.peeler())
            }
        }
    };
}

/// Densest subgraph: `f(S) = |E(S)|` (edge weights summed when weighted).
pub struct DsgOracle<'g> {
    inner: EdgeModular<'g>,
}

pub fn dsg_oracle(g: &UndirectedGraph) -> DsgOracle<'_> {
    DsgOracle {
        inner: EdgeModular::new(g, 1.0, None),
    }
}

impl<'g> DsgOracle<'g> {
    pub fn graph(&self) -> &'g UndirectedGraph {
        self.inner.graph
    }
}

edge_modular_oracle!(DsgOracle);

/// Anchored density numerator: `f(S) = 2|E(S)| - sum_{v ∈ S \ R} deg_G(v)`.
/// Supermodular, possibly negative and non-monotone.
pub struct AnchoredOracle<'g> {
    inner: EdgeModular<'g>,
    anchor: AnchorSet,
}

pub fn anchored_oracle(g: &UndirectedGraph, anchor: AnchorSet) -> AnchoredOracle<'_> {
    assert_eq!(anchor.len(), g.n(), "anchor mask must cover every vertex");
    let offset = (0..g.n())
        .map(|v| {
            if anchor.contains(v) {
                0.0
            } else {
                -g.weighted_degree(v)
            }
        })
        .collect();
    AnchoredOracle {
        inner: EdgeModular::new(g, 2.0, Some(offset)),
        anchor,
    }
}

impl<'g> AnchoredOracle<'g> {
    pub fn graph(&self) -> &'g UndirectedGraph {
        self.inner.graph
    }

    pub fn anchor(&self) -> &AnchorSet {
        &self.anchor
    }

    /// Per-vertex modular part, i.e. `-deg_G(v)` off the anchor set.
    pub fn penalty(&self) -> &[f64] {
        self.inner.offset.as_deref().expect("anchored oracle has offsets")
    }
}

edge_modular_oracle!(AnchoredOracle);

/// `h(S) = |E(S)| - y(S)`; `y ∈ B(|E(.)|)` iff `max_S h(S) <= 0`.
pub struct MembershipOracle<'g> {
    inner: EdgeModular<'g>,
}

pub fn membership_oracle(mi: &MembershipInstance) -> MembershipOracle<'_> {
    MembershipOracle {
        inner: EdgeModular::new(&mi.graph, 1.0, Some(mi.y.iter().map(|v| -v).collect())),
    }
}

impl<'g> MembershipOracle<'g> {
    pub fn graph(&self) -> &'g UndirectedGraph {
        self.inner.graph
    }

    /// The queried vector `y`.
    pub fn y(&self) -> Vec<f64> {
        self.inner
            .offset
            .as_ref()
            .expect("membership oracle has offsets")
            .iter()
            .map(|v| -v)
            .collect()
    }
}

edge_modular_oracle!(MembershipOracle);
