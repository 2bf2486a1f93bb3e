use std::collections::VecDeque;

use super::network::FlowInstance;
use super::residual::Residual;
use super::CutResult;

/// Maximum flow by shortest augmenting paths.
pub fn edmonds_karp(fi: &FlowInstance) -> CutResult {
    let (s, t) = (fi.source(), fi.sink());
    let mut r = Residual::new(fi);
    let mut value = 0.0;
    let mut via = vec![usize::MAX; r.n];
    let mut queue = VecDeque::new();
    loop {
        via.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        queue.push_back(s);
        let mut found = false;
        'bfs: while let Some(v) = queue.pop_front() {
            for &e in r.edges(v) {
                let h = r.head[e];
                if r.cap[e] > 0.0 && h != s && via[h] == usize::MAX {
                    via[h] = e;
                    if h == t {
                        found = true;
                        break 'bfs;
                    }
                    queue.push_back(h);
                }
            }
        }
        if !found {
            break;
        }
        let mut bottleneck = f64::INFINITY;
        let mut v = t;
        while v != s {
            let e = via[v];
            bottleneck = bottleneck.min(r.cap[e]);
            v = r.head[e ^ 1];
        }
        let mut v = t;
        while v != s {
            let e = via[v];
            r.push(e, bottleneck);
            v = r.head[e ^ 1];
        }
        value += bottleneck;
    }
    CutResult {
        value,
        source_side: r.reachable_from(s),
        flows: Some(r.arc_flows()),
    }
}
