//! Instance generators and fixtures shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratioforge::flow::FlowInstance;
use ratioforge::problems::{UndirectedGraph, WeightedBipartiteGraph};
use ratioforge::setfn::SetFunction;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)` with unit weights.
pub fn gnp(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    let mut r = rng(seed);
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    UndirectedGraph::unweighted(n, &e).unwrap()
}

/// `G(n, p)` with weights drawn from `{0.25, 0.5, ..., 2}` scaled by an
/// irrational-ish factor so ratios are not integers.
pub fn gnp_weighted(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    let mut r = rng(seed ^ 0x77);
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j, r.gen_range(1..=8) as f64 * std::f64::consts::FRAC_1_PI));
            }
        }
    }
    UndirectedGraph::new(n, e).unwrap()
}

pub fn clique(n: usize) -> UndirectedGraph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    UndirectedGraph::unweighted(n, &e).unwrap()
}

/// Clique on `k` vertices with a path of `tail` pendant vertices hanging
/// off its last vertex.
pub fn clique_with_tail(k: usize, tail: usize) -> UndirectedGraph {
    let mut e = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            e.push((i, j));
        }
    }
    for t in 0..tail {
        e.push((k - 1 + t, k + t));
    }
    UndirectedGraph::unweighted(k + tail, &e).unwrap()
}

/// Bipartite instance with `left` left vertices, `right` right vertices of
/// integer weight 0..=6, each adjacent to 1..=3 left vertices.
pub fn bipartite(left: usize, right: usize, seed: u64) -> WeightedBipartiteGraph {
    let mut r = rng(seed ^ 0xb1);
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    for v in 0..right {
        weights.push(r.gen_range(0..=6) as f64);
        let k = r.gen_range(1..=3.min(left));
        let mut picked: Vec<usize> = Vec::new();
        while picked.len() < k {
            let u = r.gen_range(0..left);
            if !picked.contains(&u) {
                picked.push(u);
            }
        }
        edges.extend(picked.into_iter().map(|u| (u, v)));
    }
    WeightedBipartiteGraph::new(left, weights, edges).unwrap()
}

/// Source 0, sink `n - 1`, integer capacities 1..=5.
pub fn network(n: usize, p: f64, seed: u64, undirected: bool) -> FlowInstance {
    let mut r = rng(seed ^ 0xf1);
    let mut fi = FlowInstance::new(n, 0, n - 1).unwrap();
    for i in 0..n {
        for j in 0..n {
            if i == j || (undirected && j < i) || !r.gen_bool(p) {
                continue;
            }
            let c = r.gen_range(1..=5) as f64;
            fi.add_arc(i, j, c).unwrap();
            if undirected {
                fi.add_arc(j, i, c).unwrap();
            }
        }
    }
    fi
}

/// Undirected unit-capacity graph with `m` distinct random edges.
pub fn unit_network(n: usize, m: usize, seed: u64) -> FlowInstance {
    let mut r = rng(seed ^ 0x0c);
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    while edges.len() < m {
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v, 1.0));
        }
    }
    FlowInstance::from_undirected(n, 0, n - 1, &edges).unwrap()
}

pub fn all_masks(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
}

pub fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

pub fn value_of<F: SetFunction + ?Sized>(f: &F, set: &[usize]) -> f64 {
    f.value(&mask(f.len(), set))
}

/// Minimum capacity over all `s`-`t` cuts, by enumeration.
pub fn enumerate_min_cut(fi: &FlowInstance) -> f64 {
    let n = fi.nodes();
    let mut best = f64::INFINITY;
    for m in all_masks(n) {
        if m[fi.source()] && !m[fi.sink()] {
            best = best.min(fi.cut_capacity(&m));
        }
    }
    best
}

pub fn inf_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
