use super::graph::UndirectedGraph;
use crate::error::{Error, Result};
use crate::setfn::{GroundSet, Orientation, Peeler, SetFunction};

/// Generalized p-mean density numerator `f(S) = sum_{v ∈ S} deg_S(v)^p`,
/// supermodular for `p >= 1`.
pub struct PMeanOracle<'g> {
    graph: &'g UndirectedGraph,
    ground: GroundSet,
    p: f64,
}

pub fn pmean_oracle(g: &UndirectedGraph, p: f64) -> Result<PMeanOracle<'_>> {
    if p < 1.0 || !p.is_finite() {
        return Err(Error::InvalidParameter(format!("p must be >= 1, got {p}")));
    }
    Ok(PMeanOracle {
        graph: g,
        ground: GroundSet::new(g.n())?,
        p,
    })
}

impl PMeanOracle<'_> {
    pub fn p(&self) -> f64 {
        self.p
    }

    fn pow(&self, d: f64) -> f64 {
        d.max(0.0).powf(self.p)
    }

    fn degrees(&self, members: &[bool]) -> Vec<f64> {
        (0..self.graph.n())
            .map(|v| {
                if members[v] {
                    self.graph
                        .neighbors(v)
                        .filter(|&(u, _)| members[u])
                        .map(|(_, w)| w)
                        .sum()
                } else {
                    0.0
                }
            })
            .collect()
    }

    /// `deg_S(v)^p + sum_{u ∈ δ_S(v)} [deg_S(u)^p - (deg_S(u) - w_uv)^p]`.
    fn marginal_with(&self, v: usize, deg: &[f64], alive: &[bool]) -> f64 {
        let mut m = self.pow(deg[v]);
        for (u, w) in self.graph.neighbors(v) {
            if alive[u] {
                m += self.pow(deg[u]) - self.pow(deg[u] - w);
            }
        }
        m
    }
}

impl SetFunction for PMeanOracle<'_> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn orientation(&self) -> Orientation {
        Orientation::Supermodular
    }

    fn eval(&self, members: &[bool]) -> f64 {
        self.degrees(members)
            .iter()
            .zip(members)
            .filter(|(_, &b)| b)
            .map(|(&d, _)| self.pow(d))
            .sum()
    }

    fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
        self.marginal_with(v, &self.degrees(members), members)
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        let n = self.graph.n();
        Box::new(PMeanPeeler {
            oracle: self,
            alive: vec![true; n],
            deg: (0..n).map(|v| self.graph.weighted_degree(v)).collect(),
            stamp: vec![0; n],
            epoch: 0,
        })
    }
}

/// Removing `v` changes the degree of each neighbour `u`, which in turn
/// changes the marginal of `u` and of every live neighbour of `u`.
/// Marginals are recomputed on demand in `O(deg)`.
struct PMeanPeeler<'a> {
    oracle: &'a PMeanOracle<'a>,
    alive: Vec<bool>,
    deg: Vec<f64>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl Peeler for PMeanPeeler<'_> {
    fn marginal(&mut self, v: usize) -> f64 {
        self.oracle.marginal_with(v, &self.deg, &self.alive)
    }

    fn remove(&mut self, v: usize, touched: &mut Vec<usize>) {
        self.alive[v] = false;
        self.epoch += 1;
        let g = self.oracle.graph;
        for (u, w) in g.neighbors(v) {
            if !self.alive[u] {
                continue;
            }
            self.deg[u] -= w;
            if self.stamp[u] != self.epoch {
                self.stamp[u] = self.epoch;
                touched.push(u);
            }
            for (x, _) in g.neighbors(u) {
                if self.alive[x] && self.stamp[x] != self.epoch {
                    self.stamp[x] = self.epoch;
                    touched.push(x);
                }
            }
        }
    }
}
