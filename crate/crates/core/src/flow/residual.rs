use super::network::FlowInstance;

/// Residual graph with paired edges: edge `2i` is arc `i` forward and
/// `2i + 1` its reverse, so `e ^ 1` is always the partner.
pub(crate) struct Residual {
    pub n: usize,
    pub head: Vec<usize>,
    pub cap: Vec<f64>,
    pub off: Vec<usize>,
    pub adj: Vec<usize>,
    original: Vec<f64>,
}

impl Residual {
    pub fn new(fi: &FlowInstance) -> Self {
        let n = fi.nodes();
        let caps = fi.capacities();
        let m = fi.arcs().len();
        let mut head = Vec::with_capacity(2 * m);
        let mut cap = Vec::with_capacity(2 * m);
        let mut deg = vec![0usize; n];
        for (a, &c) in fi.arcs().iter().zip(&caps) {
            head.push(a.head);
            cap.push(c);
            head.push(a.tail);
            cap.push(0.0);
            deg[a.tail] += 1;
            deg[a.head] += 1;
        }
        let mut off = vec![0; n + 1];
        for v in 0..n {
            off[v + 1] = off[v] + deg[v];
        }
        let mut fill = off.clone();
        let mut adj = vec![0; 2 * m];
        for (i, a) in fi.arcs().iter().enumerate() {
            adj[fill[a.tail]] = 2 * i;
            fill[a.tail] += 1;
            adj[fill[a.head]] = 2 * i + 1;
            fill[a.head] += 1;
        }
        Residual {
            n,
            head,
            cap,
            off,
            adj,
            original: caps,
        }
    }

    pub fn edges(&self, v: usize) -> &[usize] {
        &self.adj[self.off[v]..self.off[v + 1]]
    }

    pub fn push(&mut self, e: usize, delta: f64) {
        self.cap[e] -= delta;
        self.cap[e ^ 1] += delta;
    }

    /// Nodes reachable from `s` along edges with positive residual capacity.
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &e in self.edges(v) {
                let h = self.head[e];
                if self.cap[e] > 0.0 && !seen[h] {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        seen
    }

    /// Flow on each original arc.
    pub fn arc_flows(&self) -> Vec<f64> {
        self.original
            .iter()
            .enumerate()
            .map(|(i, &c)| c - self.cap[2 * i])
            .collect()
    }
}
