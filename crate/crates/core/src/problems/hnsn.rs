use super::graph::WeightedBipartiteGraph;
use crate::setfn::{GroundSet, Orientation, Peeler, SetFunction};

/// Heavy nodes in a small neighbourhood, over the left side `L`:
/// `f(S) = w(N̄(S))` with `N̄(S) = {v ∈ R : δ(v) ⊆ S}`. Monotone supermodular.
pub struct HnsnOracle<'b> {
    graph: &'b WeightedBipartiteGraph,
    ground: GroundSet,
}

pub fn hnsn_oracle(b: &WeightedBipartiteGraph) -> HnsnOracle<'_> {
    HnsnOracle {
        graph: b,
        ground: GroundSet::new(b.left()).expect("left side is nonempty"),
    }
}

impl<'b> HnsnOracle<'b> {
    pub fn graph(&self) -> &'b WeightedBipartiteGraph {
        self.graph
    }
}

impl SetFunction for HnsnOracle<'_> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn orientation(&self) -> Orientation {
        Orientation::Supermodular
    }

    fn eval(&self, members: &[bool]) -> f64 {
        self.graph.covered_weight(members)
    }

    fn marginal_of_removal(&self, u: usize, members: &[bool]) -> f64 {
        self.graph
            .incident(u)
            .iter()
            .filter(|&&v| self.graph.delta(v).iter().all(|&x| members[x]))
            .map(|&v| self.graph.weight(v))
            .sum()
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        let b = self.graph;
        let mut marginal = vec![0.0; b.left()];
        for v in 0..b.right() {
            for &u in b.delta(v) {
                marginal[u] += b.weight(v);
            }
        }
        Box::new(HnsnPeeler {
            graph: b,
            covered: vec![true; b.right()],
            alive: vec![true; b.left()],
            marginal,
        })
    }
}

/// A right vertex stays covered until the first of its neighbours is
/// peeled; at that point its weight leaves the marginal of every other
/// neighbour. Each right vertex is uncovered once, so a full peel is `O(m)`.
struct HnsnPeeler<'a> {
    graph: &'a WeightedBipartiteGraph,
    covered: Vec<bool>,
    alive: Vec<bool>,
    marginal: Vec<f64>,
}

impl Peeler for HnsnPeeler<'_> {
    fn marginal(&mut self, u: usize) -> f64 {
        self.marginal[u]
    }

    fn remove(&mut self, u: usize, touched: &mut Vec<usize>) {
        self.alive[u] = false;
        for &v in self.graph.incident(u) {
            if !std::mem::replace(&mut self.covered[v], false) {
                continue;
            }
            let w = self.graph.weight(v);
            for &x in self.graph.delta(v) {
                if self.alive[x] {
                    self.marginal[x] -= w;
                    touched.push(x);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::testing::*;

    #[test]
    fn toy_values() {
        let b = hnsn_toy();
        let o = hnsn_oracle(&b);
        assert_eq!(o.value(&[true, false]), 3.0);
        assert_eq!(o.value(&[true, true]), 4.0);
        assert_eq!(o.value(&[false, true]), 0.0);
        assert_eq!(o.value(&[false, false]), 0.0);
    }

    #[test]
    fn exhaustive_marginals_orientation_and_monotonicity() {
        for seed in 0..20 {
            let b = random_bipartite(7, 9, seed);
            let o = hnsn_oracle(&b);
            check_oracle(&o);
            for m in all_masks(7) {
                for v in 0..7 {
                    if !m[v] {
                        let mut bigger = m.clone();
                        bigger[v] = true;
                        assert!(o.value(&bigger) >= o.value(&m));
                    }
                }
            }
        }
    }
}
