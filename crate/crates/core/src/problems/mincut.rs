use crate::error::{Error, Result};
use crate::flow::FlowInstance;
use crate::setfn::{GroundSet, Orientation, Peeler, SetFunction};

/// Minimum s-t cut as submodular minimization over the non-terminal nodes:
/// `g(S) = c(δ⁺(S ∪ {s})) - c(δ⁺({s}))`.
///
/// Arcs are directed; an undirected graph enters as a pair of opposing arcs
/// (see [`FlowInstance::from_undirected`]), which gives the usual undirected
/// cut function.
pub struct MincutOracle<'f> {
    fi: &'f FlowInstance,
    ground: GroundSet,
    /// Ground element of each node (`None` for the terminals).
    element: Vec<Option<usize>>,
    node: Vec<usize>,
    out_off: Vec<usize>,
    out_arcs: Vec<(usize, f64)>,
    in_off: Vec<usize>,
    in_arcs: Vec<(usize, f64)>,
    source_out: f64,
}

pub fn mincut_oracle(fi: &FlowInstance) -> Result<MincutOracle<'_>> {
    if fi.has_infinite_arcs() {
        return Err(Error::InvalidParameter(
            "cut oracle needs finite capacities".into(),
        ));
    }
    let (s, t) = (fi.source(), fi.sink());
    let node: Vec<usize> = (0..fi.nodes()).filter(|&v| v != s && v != t).collect();
    let ground = GroundSet::new(node.len())
        .map_err(|_| Error::InvalidParameter("network has no non-terminal nodes".into()))?;
    let mut element = vec![None; fi.nodes()];
    for (i, &v) in node.iter().enumerate() {
        element[v] = Some(i);
    }
    let n = fi.nodes();
    let mut out_deg = vec![0; n];
    let mut in_deg = vec![0; n];
    for a in fi.arcs() {
        if a.tail != a.head {
            out_deg[a.tail] += 1;
            in_deg[a.head] += 1;
        }
    }
    let offsets = |deg: &[usize]| {
        let mut off = vec![0; n + 1];
        for i in 0..n {
            off[i + 1] = off[i] + deg[i];
        }
        off
    };
    let out_off = offsets(&out_deg);
    let in_off = offsets(&in_deg);
    let mut out_fill = out_off.clone();
    let mut in_fill = in_off.clone();
    let mut out_arcs = vec![(0, 0.0); out_off[n]];
    let mut in_arcs = vec![(0, 0.0); in_off[n]];
    let mut source_out = 0.0;
    for a in fi.arcs() {
        if a.tail == a.head {
            continue;
        }
        out_arcs[out_fill[a.tail]] = (a.head, a.cap);
        out_fill[a.tail] += 1;
        in_arcs[in_fill[a.head]] = (a.tail, a.cap);
        in_fill[a.head] += 1;
        if a.tail == s {
            source_out += a.cap;
        }
    }
    Ok(MincutOracle {
        fi,
        ground,
        element,
        node,
        out_off,
        out_arcs,
        in_off,
        in_arcs,
        source_out,
    })
}

impl<'f> MincutOracle<'f> {
    pub fn instance(&self) -> &'f FlowInstance {
        self.fi
    }

    /// `c(δ⁺({s}))`; add it to `g(S)` to get the cut capacity.
    pub fn source_cut(&self) -> f64 {
        self.source_out
    }

    /// Network node of ground element `i`.
    pub fn node_of(&self, i: usize) -> usize {
        self.node[i]
    }

    /// Node mask of the source side `S ∪ {s}`.
    pub fn source_side_mask(&self, members: &[bool]) -> Vec<bool> {
        let mut side = vec![false; self.fi.nodes()];
        side[self.fi.source()] = true;
        for (i, &b) in members.iter().enumerate() {
            if b {
                side[self.node[i]] = true;
            }
        }
        side
    }

    /// Source side `S ∪ {s}` as sorted node ids.
    pub fn source_side(&self, members: &[bool]) -> Vec<usize> {
        crate::setfn::elements_of(&self.source_side_mask(members))
    }

    pub fn cut_value(&self, members: &[bool]) -> f64 {
        self.value(members) + self.source_out
    }

    fn out(&self, v: usize) -> &[(usize, f64)] {
        &self.out_arcs[self.out_off[v]..self.out_off[v + 1]]
    }

    fn inc(&self, v: usize) -> &[(usize, f64)] {
        &self.in_arcs[self.in_off[v]..self.in_off[v + 1]]
    }
}

impl SetFunction for MincutOracle<'_> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn orientation(&self) -> Orientation {
        Orientation::Submodular
    }

    fn eval(&self, members: &[bool]) -> f64 {
        self.fi.cut_capacity(&self.source_side_mask(members)) - self.source_out
    }

    /// `deg⁺(v) - deg⁻(v)`: capacity from `v` into the sink side minus
    /// capacity into `v` from the rest of the source side.
    fn marginal_of_removal(&self, i: usize, members: &[bool]) -> f64 {
        let side = self.source_side_mask(members);
        let v = self.node[i];
        let to_sink: f64 = self.out(v).iter().filter(|&&(h, _)| !side[h]).map(|a| a.1).sum();
        let from_source: f64 = self.inc(v).iter().filter(|&&(h, _)| side[h]).map(|a| a.1).sum();
        to_sink - from_source
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        let n = self.node.len();
        let side: Vec<bool> = (0..self.fi.nodes()).map(|v| v != self.fi.sink()).collect();
        let mut to_sink = vec![0.0; n];
        let mut from_source = vec![0.0; n];
        for (i, &v) in self.node.iter().enumerate() {
            to_sink[i] = self.out(v).iter().filter(|&&(h, _)| !side[h]).map(|a| a.1).sum();
            from_source[i] = self.inc(v).iter().filter(|&&(h, _)| side[h]).map(|a| a.1).sum();
        }
        Box::new(MincutPeeler {
            oracle: self,
            alive: vec![true; n],
            to_sink,
            from_source,
        })
    }
}

struct MincutPeeler<'a> {
    oracle: &'a MincutOracle<'a>,
    alive: Vec<bool>,
    to_sink: Vec<f64>,
    from_source: Vec<f64>,
}

impl Peeler for MincutPeeler<'_> {
    fn marginal(&mut self, i: usize) -> f64 {
        self.to_sink[i] - self.from_source[i]
    }

    fn remove(&mut self, i: usize, touched: &mut Vec<usize>) {
        self.alive[i] = false;
        let v = self.oracle.node[i];
        for &(h, c) in self.oracle.out(v) {
            if let Some(j) = self.oracle.element[h].filter(|&j| self.alive[j]) {
                self.from_source[j] -= c;
                touched.push(j);
            }
        }
        for &(h, c) in self.oracle.inc(v) {
            if let Some(j) = self.oracle.element[h].filter(|&j| self.alive[j]) {
                self.to_sink[j] += c;
                touched.push(j);
            }
        }
    }
}
