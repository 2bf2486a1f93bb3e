use super::network::FlowInstance;
use super::residual::Residual;
use super::CutResult;

/// Maximum flow by highest-label push-relabel with the gap heuristic and a
/// global relabel every `n` relabels.
///
/// Labels below `n` estimate the distance to the sink; nodes that can no
/// longer reach the sink climb above `n` and return their excess to the
/// source, so the result is a flow rather than a preflow.
pub fn push_relabel(fi: &FlowInstance) -> CutResult {
    let mut pr = PushRelabel::new(fi);
    pr.run();
    CutResult {
        value: pr.excess[fi.sink()],
        source_side: pr.r.reachable_from(fi.source()),
        flows: Some(pr.r.arc_flows()),
    }
}

struct PushRelabel {
    r: Residual,
    s: usize,
    t: usize,
    label: Vec<usize>,
    excess: Vec<f64>,
    current: Vec<usize>,
    buckets: Vec<Vec<usize>>,
    active: Vec<bool>,
    /// Count of nodes per label, for labels below `n`.
    count: Vec<usize>,
    top: usize,
    relabels: usize,
}

impl PushRelabel {
    fn new(fi: &FlowInstance) -> Self {
        let r = Residual::new(fi);
        let n = r.n;
        PushRelabel {
            current: r.off[..n].to_vec(),
            r,
            s: fi.source(),
            t: fi.sink(),
            label: vec![0; n],
            excess: vec![0.0; n],
            buckets: vec![Vec::new(); 2 * n + 1],
            active: vec![false; n],
            count: vec![0; n + 1],
            top: 0,
            relabels: 0,
        }
    }

    fn n(&self) -> usize {
        self.r.n
    }

    fn run(&mut self) {
        let s = self.s;
        for i in 0..self.r.edges(s).len() {
            let e = self.r.edges(s)[i];
            let c = self.r.cap[e];
            if c > 0.0 {
                let h = self.r.head[e];
                self.r.push(e, c);
                self.excess[h] += c;
                self.excess[s] -= c;
            }
        }
        self.global_relabel();
        while let Some(v) = self.pop_active() {
            self.discharge(v);
            if self.relabels >= self.n() {
                self.relabels = 0;
                self.global_relabel();
            }
        }
    }

    fn activate(&mut self, v: usize) {
        if v != self.s && v != self.t && !self.active[v] && self.excess[v] > 0.0 {
            let d = self.label[v];
            if d < self.buckets.len() {
                self.active[v] = true;
                self.buckets[d].push(v);
                self.top = self.top.max(d);
            }
        }
    }

    fn pop_active(&mut self) -> Option<usize> {
        loop {
            if let Some(v) = self.buckets[self.top].pop() {
                self.active[v] = false;
                if self.label[v] == self.top && self.excess[v] > 0.0 {
                    return Some(v);
                }
                // stale entry from before a global relabel or gap
                self.activate(v);
                continue;
            }
            if self.top == 0 {
                return None;
            }
            self.top -= 1;
        }
    }

    /// Exact labels: distance to `t` in the residual graph, or `n` plus the
    /// distance to `s` for nodes cut off from `t`.
    fn global_relabel(&mut self) {
        let n = self.n();
        let unset = 2 * n;
        self.label.iter_mut().for_each(|d| *d = unset);
        self.count.iter_mut().for_each(|c| *c = 0);
        for (root, base) in [(self.t, 0), (self.s, n)] {
            if self.label[root] != unset {
                continue;
            }
            self.label[root] = base;
            let mut frontier = vec![root];
            let mut depth = base;
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &v in &frontier {
                    for &e in self.r.edges(v) {
                        // u can push into v along e ^ 1
                        let u = self.r.head[e];
                        if self.label[u] == unset && self.r.cap[e ^ 1] > 0.0 {
                            self.label[u] = depth + 1;
                            next.push(u);
                        }
                    }
                }
                frontier = next;
                depth += 1;
            }
        }
        self.label[self.s] = n;
        for v in 0..n {
            if self.label[v] < n {
                self.count[self.label[v]] += 1;
            }
            self.current[v] = self.r.off[v];
        }
        for b in &mut self.buckets {
            b.clear();
        }
        self.active.iter_mut().for_each(|a| *a = false);
        self.top = 0;
        for v in 0..n {
            self.activate(v);
        }
    }

    fn discharge(&mut self, v: usize) {
        let end = self.r.off[v + 1];
        while self.excess[v] > 0.0 {
            if self.current[v] == end {
                self.relabel(v);
                if self.label[v] >= 2 * self.n() {
                    return;
                }
                continue;
            }
            let e = self.r.adj[self.current[v]];
            let h = self.r.head[e];
            if self.r.cap[e] > 0.0 && self.label[v] == self.label[h] + 1 {
                let delta = self.excess[v].min(self.r.cap[e]);
                self.r.push(e, delta);
                self.excess[v] -= delta;
                self.excess[h] += delta;
                self.activate(h);
            } else {
                self.current[v] += 1;
            }
        }
    }

    fn relabel(&mut self, v: usize) {
        let n = self.n();
        self.relabels += 1;
        let old = self.label[v];
        if old < n && self.count[old] == 1 {
            // v is the last node at this level: everything above it (below n)
            // is cut off from the sink
            for u in 0..n {
                let d = self.label[u];
                if u != self.s && d >= old && d < n {
                    self.count[d] -= 1;
                    self.label[u] = n + 1;
                }
            }
            self.current[v] = self.r.off[v];
            // v may still need a higher label to reach the source
            if self.admissible_exists(v) {
                return;
            }
        } else if old < n {
            self.count[old] -= 1;
        }
        let mut best = usize::MAX;
        for &e in self.r.edges(v) {
            if self.r.cap[e] > 0.0 {
                best = best.min(self.label[self.r.head[e]]);
            }
        }
        let new = if best == usize::MAX { 2 * n } else { best + 1 };
        self.label[v] = new;
        if new < n {
            self.count[new] += 1;
        }
        self.current[v] = self.r.off[v];
    }

    fn admissible_exists(&self, v: usize) -> bool {
        self.r.edges(v).iter().any(|&e| {
            self.r.cap[e] > 0.0 && self.label[v] == self.label[self.r.head[e]] + 1
        })
    }
}
