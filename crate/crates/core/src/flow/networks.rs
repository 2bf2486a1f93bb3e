use super::network::FlowInstance;
use super::MaxFlowEngine;
use crate::error::Result;
use crate::extract::Lambda;
use crate::problems::{AnchorSet, MembershipInstance, UndirectedGraph, WeightedBipartiteGraph};
use crate::setfn::{GroundSet, Orientation, SetFunction};

/// `F(S) = a * w(E(S)) + c(S)`: an edge-count term plus a modular term.
/// Densest subgraph, anchored density, membership slack and every
/// contraction of them share this form and one cut network.
#[derive(Debug, Clone)]
pub struct DensityInstance {
    graph: UndirectedGraph,
    ground: GroundSet,
    edge_scale: f64,
    linear: Vec<f64>,
}

impl DensityInstance {
    pub fn new(graph: UndirectedGraph, edge_scale: f64, linear: Vec<f64>) -> Self {
        assert_eq!(linear.len(), graph.n());
        assert!(edge_scale >= 0.0);
        DensityInstance {
            ground: GroundSet::new(graph.n()).expect("graphs have at least one vertex"),
            graph,
            edge_scale,
            linear,
        }
    }

    pub fn dsg(g: &UndirectedGraph) -> Self {
        Self::new(g.clone(), 1.0, vec![0.0; g.n()])
    }

    /// `2 w(E(S)) - sum_{v ∈ S \ R} deg(v)`.
    pub fn anchored(g: &UndirectedGraph, anchor: &AnchorSet) -> Self {
        let linear = (0..g.n())
            .map(|v| if anchor.contains(v) { 0.0 } else { -g.weighted_degree(v) })
            .collect();
        Self::new(g.clone(), 2.0, linear)
    }

    /// `w(E(S)) - y(S)`.
    pub fn membership(mi: &MembershipInstance) -> Self {
        Self::new(mi.graph.clone(), 1.0, mi.y.iter().map(|v| -v).collect())
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn edge_scale(&self) -> f64 {
        self.edge_scale
    }

    pub fn linear(&self) -> &[f64] {
        &self.linear
    }

    /// The same function on the induced sub-instance `kept`, reindexed.
    pub fn restrict(&self, kept: &[usize]) -> Result<Self> {
        Ok(Self::new(
            self.graph.induced(kept)?,
            self.edge_scale,
            kept.iter().map(|&v| self.linear[v]).collect(),
        ))
    }

    /// `F_A(S) = F(S ∪ A) - F(A)` on `V \ A`, with the kept vertices.
    pub fn contract(&self, a: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut in_a = vec![false; self.graph.n()];
        for &v in a {
            in_a[v] = true;
        }
        let kept: Vec<usize> = (0..self.graph.n()).filter(|&v| !in_a[v]).collect();
        let mut sub = self.restrict(&kept)?;
        for (i, &v) in kept.iter().enumerate() {
            let to_a: f64 = self
                .graph
                .neighbors(v)
                .filter(|&(u, _)| in_a[u])
                .map(|(_, w)| w)
                .sum();
            sub.linear[i] += self.edge_scale * to_a;
        }
        Ok((sub, kept))
    }

    /// Network whose minimum cuts maximize `den * F(S) - num * |S|`.
    ///
    /// Nodes: source 0, vertex `v` as `v + 1`, sink `n + 1`. With
    /// `β_v = den * c_v - num`, arcs are `s -> v` of capacity
    /// `den * a * deg(v) + 2 max(β_v, 0)`, `v -> t` of capacity
    /// `2 max(-β_v, 0)`, and `den * a * w` both ways along every edge, so a
    /// cut with source side `{s} ∪ S` costs a constant minus twice the gain.
    pub fn cut_network(&self, lambda: Lambda) -> FlowInstance {
        let n = self.graph.n();
        let mut fi = FlowInstance::new(n + 2, 0, n + 1).expect("terminals are distinct");
        let k = lambda.den * self.edge_scale;
        for v in 0..n {
            let beta = lambda.den * self.linear[v] - lambda.num;
            let up = k * self.graph.weighted_degree(v) + 2.0 * beta.max(0.0);
            let down = 2.0 * (-beta).max(0.0);
            if up > 0.0 {
                fi.add_arc(0, v + 1, up).expect("finite capacity");
            }
            if down > 0.0 {
                fi.add_arc(v + 1, n + 1, down).expect("finite capacity");
            }
        }
        for &(u, v, w) in self.graph.edges() {
            if k * w > 0.0 {
                fi.add_arc(u + 1, v + 1, k * w).expect("finite capacity");
                fi.add_arc(v + 1, u + 1, k * w).expect("finite capacity");
            }
        }
        fi
    }

    /// `den * F(S) - num * |S|`.
    pub fn gain(&self, set: &[usize], lambda: Lambda) -> f64 {
        lambda.den * self.value_of_set(set) - lambda.num * set.len() as f64
    }

    fn value_of_set(&self, set: &[usize]) -> f64 {
        self.value(&crate::setfn::mask_of(self.graph.n(), set))
    }

    /// Smallest maximizer of `den * F(S) - num * |S|`, optionally forced to
    /// contain `forced`; returns the set and its gain.
    pub fn max_gain_set(
        &self,
        lambda: Lambda,
        engine: MaxFlowEngine,
        forced: Option<usize>,
    ) -> (Vec<usize>, f64) {
        let mut fi = self.cut_network(lambda);
        if let Some(v) = forced {
            fi.add_infinite_arc(0, v + 1).expect("node in range");
        }
        let cut = engine.run(&fi);
        let set: Vec<usize> = (1..=self.graph.n()).filter(|&x| cut.source_side[x]).map(|x| x - 1).collect();
        let gain = self.gain(&set, lambda);
        (set, gain)
    }
}

impl SetFunction for DensityInstance {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn orientation(&self) -> Orientation {
        Orientation::Supermodular
    }

    fn eval(&self, members: &[bool]) -> f64 {
        let modular: f64 = members
            .iter()
            .zip(&self.linear)
            .filter(|(&b, _)| b)
            .map(|(_, &c)| c)
            .sum();
        self.edge_scale * self.graph.induced_weight(members) + modular
    }

    fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
        let deg: f64 = self
            .graph
            .neighbors(v)
            .filter(|&(u, _)| members[u])
            .map(|(_, w)| w)
            .sum();
        self.edge_scale * deg + self.linear[v]
    }
}

/// Minimum-cut network for `Φ(S) = λ|S| - w(N̄(S))` over `S ⊆ L`.
///
/// Nodes: source 0, left vertex `u` as `u + 1`, right vertex `v` as
/// `|L| + v + 1`, sink last. Arcs `s -> u` of capacity `λ`, `u -> v`
/// infinite for `u ∈ δ(v)`, `v -> t` of capacity `w(v)`. The cut with sink
/// side `S ∪ N̄(S) ∪ {t}` costs `λ|S| + w(R) - w(N̄(S))`.
pub fn hnsn_cut_network(b: &WeightedBipartiteGraph, lambda: f64) -> FlowInstance {
    hnsn_network(b, Lambda { num: lambda, den: 1.0 })
}

/// As [`hnsn_cut_network`] for `λ = num/den`, every capacity scaled by `den`.
pub(crate) fn hnsn_network(b: &WeightedBipartiteGraph, lambda: Lambda) -> FlowInstance {
    let (l, r) = (b.left(), b.right());
    let t = l + r + 1;
    let mut fi = FlowInstance::new(l + r + 2, 0, t).expect("terminals are distinct");
    for u in 0..l {
        fi.add_arc(0, u + 1, lambda.num.max(0.0)).expect("finite capacity");
    }
    for &(u, v) in b.edges() {
        fi.add_infinite_arc(u + 1, l + v + 1).expect("node in range");
    }
    for v in 0..r {
        fi.add_arc(l + v + 1, t, lambda.den * b.weight(v)).expect("finite capacity");
    }
    fi
}

/// Left vertices on the sink side of a minimum cut.
pub(crate) fn hnsn_sink_side(b: &WeightedBipartiteGraph, lambda: Lambda, engine: MaxFlowEngine) -> Vec<usize> {
    let cut = engine.run(&hnsn_network(b, lambda));
    (0..b.left()).filter(|&u| !cut.source_side[u + 1]).collect()
}

/// A minimizer of `Φ(S) = λ|S| - w(N̄(S))` (the largest one) and `Φ(S)`.
pub fn hnsn_phi_minimizer(b: &WeightedBipartiteGraph, lambda: f64) -> (Vec<usize>, f64) {
    let set = hnsn_sink_side(b, Lambda { num: lambda, den: 1.0 }, MaxFlowEngine::PushRelabel);
    let mask = crate::setfn::mask_of(b.left(), &set);
    let phi = lambda * set.len() as f64 - b.covered_weight(&mask);
    (set, phi)
}

/// Densest-subgraph network: `s -> v` of capacity `deg(v)`, both arcs of
/// every edge at its weight, `v -> t` of capacity `2λ`. The source side
/// minus `s` maximizes `w(E(S)) - λ|S|`.
pub fn dsg_cut_network(g: &UndirectedGraph, lambda: f64) -> FlowInstance {
    DensityInstance::dsg(g).cut_network(Lambda { num: lambda, den: 1.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::{edmonds_karp, push_relabel};
    use crate::problems::testing::*;
    use crate::setfn::{elements_of, mask_of};

    #[test]
    fn hnsn_toy_at_two_and_a_half() {
        let b = hnsn_toy();
        let (s, phi) = hnsn_phi_minimizer(&b, 2.5);
        assert_eq!(s, vec![0]);
        assert_eq!(phi, -0.5);
        let fi = hnsn_cut_network(&b, 2.5);
        // λ|S| + w(R) - w(N̄(S)) = 2.5 + 4 - 3
        assert_eq!(push_relabel(&fi).value, 3.5);
    }

    #[test]
    fn hnsn_large_lambda_gives_empty() {
        let b = hnsn_toy();
        let (s, phi) = hnsn_phi_minimizer(&b, 5.0);
        assert!(s.is_empty());
        assert_eq!(phi, 0.0);
    }

    #[test]
    fn hnsn_cut_matches_brute_force_phi() {
        for seed in 0..40 {
            let b = random_bipartite(8, 10, seed);
            for lambda in [0.5, 1.0, 2.0, 3.5] {
                let (_, phi) = hnsn_phi_minimizer(&b, lambda);
                let best = all_masks(8)
                    .map(|m| lambda * m.iter().filter(|&&x| x).count() as f64 - b.covered_weight(&m))
                    .fold(f64::INFINITY, f64::min);
                assert_eq!(phi, best, "seed {seed}, λ {lambda}");
            }
        }
    }

    #[test]
    fn k4_at_one_takes_everything() {
        let g = clique(4);
        let fi = dsg_cut_network(&g, 1.0);
        let cut = edmonds_karp(&fi);
        let s: Vec<usize> = (1..=4).filter(|&x| cut.source_side[x]).map(|x| x - 1).collect();
        assert_eq!(s, vec![0, 1, 2, 3]);
        // 2m - 2 (|E(S)| - λ|S|) = 12 - 4
        assert_eq!(cut.value, 8.0);
        let fi = dsg_cut_network(&g, 1.6);
        let cut = push_relabel(&fi);
        assert!((1..=4).all(|x| !cut.source_side[x]));
    }

    #[test]
    fn density_network_matches_brute_force() {
        for seed in 0..40 {
            let g = if seed % 2 == 0 {
                random_graph(9, 0.4, seed)
            } else {
                random_weighted_graph(9, 0.4, seed)
            };
            let y: Vec<f64> = (0..9).map(|v| ((v * 7 + seed as usize) % 5) as f64 * 0.5).collect();
            let mi = MembershipInstance::new(g.clone(), y).unwrap();
            let anchor = AnchorSet::new(9, &[0, 3, 4]).unwrap();
            for inst in [DensityInstance::dsg(&g), DensityInstance::anchored(&g, &anchor), DensityInstance::membership(&mi)] {
                for lambda in [Lambda { num: 0.0, den: 1.0 }, Lambda { num: 7.0, den: 4.0 }, Lambda { num: -3.0, den: 2.0 }] {
                    let (s, gain) = inst.max_gain_set(lambda, MaxFlowEngine::PushRelabel, None);
                    let best = all_masks(9)
                        .map(|m| inst.gain(&elements_of(&m), lambda))
                        .fold(f64::NEG_INFINITY, f64::max);
                    assert!((gain - best).abs() <= 1e-9 * (1.0 + best.abs()), "seed {seed}: {gain} vs {best}");
                    assert_eq!(inst.gain(&s, lambda), gain);
                }
            }
        }
    }

    #[test]
    fn contraction_matches_difference() {
        let g = random_graph(8, 0.5, 3);
        let anchor = AnchorSet::new(8, &[1, 2]).unwrap();
        let inst = DensityInstance::anchored(&g, &anchor);
        let (c, kept) = inst.contract(&[0, 5]).unwrap();
        let base = inst.value(&mask_of(8, &[0, 5]));
        for m in all_masks(kept.len()) {
            let mut full = mask_of(8, &[0, 5]);
            for (i, &b) in m.iter().enumerate() {
                full[kept[i]] |= b;
            }
            assert!((c.value(&m) - (inst.value(&full) - base)).abs() < 1e-12);
        }
    }
}
