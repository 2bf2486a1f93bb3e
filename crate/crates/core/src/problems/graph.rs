use crate::error::{Error, Result};

/// Undirected graph on vertices `0..n` in compressed adjacency form.
///
/// Edges keep their input order so that serialization reproduces the input.
/// Parallel edges are allowed and count separately.
#[derive(Debug, Clone, PartialEq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    weighted: bool,
    offsets: Vec<usize>,
    adj: Vec<usize>,
    adj_w: Vec<f64>,
    wdeg: Vec<f64>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        let weighted = edges.iter().any(|e| e.2 != 1.0);
        Self::build(n, edges, weighted)
    }

    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges.iter().map(|&(u, v)| (u, v, 1.0)).collect(), false)
    }

    pub(crate) fn build(n: usize, edges: Vec<(usize, usize, f64)>, weighted: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut deg = vec![0usize; n];
        for &(u, v, w) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) outside vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if w < 0.0 || !w.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) has invalid weight {w}"
                )));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut offsets = vec![0; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![0; offsets[n]];
        let mut adj_w = vec![0.0; offsets[n]];
        let mut wdeg = vec![0.0; n];
        for &(u, v, w) in &edges {
            adj[fill[u]] = v;
            adj_w[fill[u]] = w;
            fill[u] += 1;
            adj[fill[v]] = u;
            adj_w[fill[v]] = w;
            fill[v] += 1;
            wdeg[u] += w;
            wdeg[v] += w;
        }
        Ok(UndirectedGraph {
            n,
            edges,
            weighted,
            offsets,
            adj,
            adj_w,
            wdeg,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = self.offsets[v]..self.offsets[v + 1];
        self.adj[r.clone()].iter().copied().zip(self.adj_w[r].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sum of incident edge weights.
    pub fn weighted_degree(&self, v: usize) -> f64 {
        self.wdeg[v]
    }

    pub fn max_weighted_degree(&self) -> f64 {
        self.wdeg.iter().copied().fold(0.0, f64::max)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Weight of edges with both endpoints in `members`.
    pub fn induced_weight(&self, members: &[bool]) -> f64 {
        self.edges
            .iter()
            .filter(|&&(u, v, _)| members[u] && members[v])
            .map(|e| e.2)
            .sum()
    }

    /// Subgraph induced by `kept` (original indices, ascending). Vertex `i`
    /// of the result is `kept[i]`.
    pub fn induced(&self, kept: &[usize]) -> Result<UndirectedGraph> {
        let mut to_new = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            to_new[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v, _)| to_new[u] != usize::MAX && to_new[v] != usize::MAX)
            .map(|&(u, v, w)| (to_new[u], to_new[v], w))
            .collect();
        Self::build(kept.len(), edges, self.weighted)
    }
}

/// Bipartite graph `(L, R, E)` with nonnegative weights on `R`.
///
/// `delta(v)` lists the left neighbours of right vertex `v`; `incident(u)`
/// lists the right neighbours of left vertex `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedBipartiteGraph {
    left: usize,
    weights: Vec<f64>,
    edges: Vec<(usize, usize)>,
    r_off: Vec<usize>,
    r_adj: Vec<usize>,
    l_off: Vec<usize>,
    l_adj: Vec<usize>,
}

impl WeightedBipartiteGraph {
    pub fn new(left: usize, weights: Vec<f64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if left == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let right = weights.len();
        for (v, &w) in weights.iter().enumerate() {
            if w < 0.0 || !w.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "right vertex {v} has invalid weight {w}"
                )));
            }
        }
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut rdeg = vec![0usize; right];
        let mut ldeg = vec![0usize; left];
        for &(u, v) in &edges {
            if u >= left || v >= right {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) outside 0..{left} x 0..{right}"
                )));
            }
            if !seen.insert((u, v)) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u}, {v})")));
            }
            rdeg[v] += 1;
            ldeg[u] += 1;
        }
        if let Some(v) = rdeg.iter().position(|&d| d == 0) {
            return Err(Error::InvalidParameter(format!(
                "right vertex {v} has no neighbours"
            )));
        }
        let csr = |deg: &[usize]| {
            let mut off = vec![0; deg.len() + 1];
            for i in 0..deg.len() {
                off[i + 1] = off[i] + deg[i];
            }
            off
        };
        let r_off = csr(&rdeg);
        let l_off = csr(&ldeg);
        let mut r_fill = r_off.clone();
        let mut l_fill = l_off.clone();
        let mut r_adj = vec![0; edges.len()];
        let mut l_adj = vec![0; edges.len()];
        for &(u, v) in &edges {
            r_adj[r_fill[v]] = u;
            r_fill[v] += 1;
            l_adj[l_fill[u]] = v;
            l_fill[u] += 1;
        }
        Ok(WeightedBipartiteGraph {
            left,
            weights,
            edges,
            r_off,
            r_adj,
            l_off,
            l_adj,
        })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.weights.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Left neighbours of right vertex `v`.
    pub fn delta(&self, v: usize) -> &[usize] {
        &self.r_adj[self.r_off[v]..self.r_off[v + 1]]
    }

    /// Right neighbours of left vertex `u`.
    pub fn incident(&self, u: usize) -> &[usize] {
        &self.l_adj[self.l_off[u]..self.l_off[u + 1]]
    }

    /// `w(N̄(S))`: weight of right vertices whose whole neighbourhood lies in `S`.
    pub fn covered_weight(&self, members: &[bool]) -> f64 {
        (0..self.right())
            .filter(|&v| self.delta(v).iter().all(|&u| members[u]))
            .map(|v| self.weights[v])
            .sum()
    }

    /// Number of connected components of the bipartite graph; isolated left
    /// vertices count as their own component.
    pub fn components(&self) -> usize {
        let total = self.left + self.right();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let a = find(&mut parent, u);
            let b = find(&mut parent, self.left + v);
            if a != b {
                parent[a] = b;
            }
        }
        (0..total).filter(|&x| find(&mut parent, x) == x).count()
    }
}

/// Anchor set `R ⊆ V` as a mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorSet {
    mask: Vec<bool>,
}

impl AnchorSet {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mut mask = vec![false; n];
        for &v in members {
            if v >= n {
                return Err(Error::InvalidParameter(format!(
                    "anchor {v} outside vertex range 0..{n}"
                )));
            }
            mask[v] = true;
        }
        Ok(AnchorSet { mask })
    }

    pub fn all(n: usize) -> Self {
        AnchorSet { mask: vec![true; n] }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask[v]
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn members(&self) -> Vec<usize> {
        crate::setfn::elements_of(&self.mask)
    }
}

/// Query for "is `y` in the base contrapolymatroid of `|E(S)|`?".
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipInstance {
    pub graph: UndirectedGraph,
    pub y: Vec<f64>,
}

impl MembershipInstance {
    pub fn new(graph: UndirectedGraph, y: Vec<f64>) -> Result<Self> {
        if y.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "vector has {} entries, graph has {} vertices",
                y.len(),
                graph.n()
            )));
        }
        Ok(MembershipInstance { graph, y })
    }
}
