use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowArc {
    pub tail: usize,
    pub head: usize,
    /// Ignored when `infinite` is set.
    pub cap: f64,
    pub infinite: bool,
}

/// Directed capacitated network with a source and a sink.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowInstance {
    nodes: usize,
    arcs: Vec<FlowArc>,
    source: usize,
    sink: usize,
}

impl FlowInstance {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes {
            return Err(Error::InvalidParameter(format!(
                "terminals ({source}, {sink}) outside 0..{nodes}"
            )));
        }
        if source == sink {
            return Err(Error::InvalidParameter("source and sink coincide".into()));
        }
        Ok(FlowInstance {
            nodes,
            arcs: Vec::new(),
            source,
            sink,
        })
    }

    /// Each undirected edge `{u, v}` becomes the arcs `u -> v` and `v -> u`.
    pub fn from_undirected(
        nodes: usize,
        source: usize,
        sink: usize,
        edges: &[(usize, usize, f64)],
    ) -> Result<Self> {
        let mut fi = Self::new(nodes, source, sink)?;
        for &(u, v, c) in edges {
            fi.add_arc(u, v, c)?;
            fi.add_arc(v, u, c)?;
        }
        Ok(fi)
    }

    pub fn add_arc(&mut self, tail: usize, head: usize, cap: f64) -> Result<usize> {
        self.check_ends(tail, head)?;
        if cap < 0.0 || !cap.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "arc {tail} -> {head} has invalid capacity {cap}"
            )));
        }
        self.arcs.push(FlowArc {
            tail,
            head,
            cap,
            infinite: false,
        });
        Ok(self.arcs.len() - 1)
    }

    pub fn add_infinite_arc(&mut self, tail: usize, head: usize) -> Result<usize> {
        self.check_ends(tail, head)?;
        self.arcs.push(FlowArc {
            tail,
            head,
            cap: 0.0,
            infinite: true,
        });
        Ok(self.arcs.len() - 1)
    }

    fn check_ends(&self, tail: usize, head: usize) -> Result<()> {
        if tail >= self.nodes || head >= self.nodes {
            return Err(Error::InvalidParameter(format!(
                "arc {tail} -> {head} outside 0..{}",
                self.nodes
            )));
        }
        Ok(())
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }

    pub fn has_infinite_arcs(&self) -> bool {
        self.arcs.iter().any(|a| a.infinite)
    }

    /// Finite stand-in for infinite capacity: one more than the total
    /// finite capacity, so it exceeds every cut that avoids infinite arcs.
    pub fn infinite_value(&self) -> f64 {
        self.arcs
            .iter()
            .filter(|a| !a.infinite)
            .map(|a| a.cap)
            .sum::<f64>()
            + 1.0
    }

    /// Effective capacity of every arc, infinite ones resolved.
    pub fn capacities(&self) -> Vec<f64> {
        let inf = self.infinite_value();
        self.arcs
            .iter()
            .map(|a| if a.infinite { inf } else { a.cap })
            .collect()
    }

    /// Capacity of arcs leaving `source_side`; `f64::INFINITY` if an
    /// infinite arc crosses.
    pub fn cut_capacity(&self, source_side: &[bool]) -> f64 {
        let mut total = 0.0;
        for a in &self.arcs {
            if source_side[a.tail] && !source_side[a.head] {
                if a.infinite {
                    return f64::INFINITY;
                }
                total += a.cap;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminals_must_differ() {
        assert!(FlowInstance::new(3, 1, 1).is_err());
        assert!(FlowInstance::new(3, 0, 3).is_err());
    }

    #[test]
    fn cut_capacity_and_infinity() {
        let mut fi = FlowInstance::new(3, 0, 2).unwrap();
        fi.add_arc(0, 1, 2.0).unwrap();
        fi.add_arc(1, 2, 3.0).unwrap();
        fi.add_infinite_arc(0, 2).unwrap();
        assert!(fi.add_arc(0, 1, -1.0).is_err());
        assert_eq!(fi.infinite_value(), 6.0);
        assert_eq!(fi.cut_capacity(&[true, true, false]), f64::INFINITY);
        let mut g = FlowInstance::new(3, 0, 2).unwrap();
        g.add_arc(0, 1, 2.0).unwrap();
        g.add_arc(1, 2, 3.0).unwrap();
        assert_eq!(g.cut_capacity(&[true, false, false]), 2.0);
        assert_eq!(g.cut_capacity(&[true, true, false]), 3.0);
    }
}
