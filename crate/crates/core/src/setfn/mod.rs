//! Normalized set functions and base-polytope primitives.
//!
//! A [`SetFunction`] is a value oracle over a ground set `V = {0, .., n-1}`
//! together with an orientation tag (submodular or supermodular). Subsets are
//! passed as membership masks of length `n`. The primitive marginal is the
//! marginal of *removal*, `f(v | S - v) = f(S) - f(S - v)`, which is what
//! every peeling and greedy routine consumes.
//!
//! Oracles also hand out a [`Peeler`]: a mutable scratch object that starts
//! at `S = V`, removes one element at a time and keeps all marginals of
//! removal current. Problem oracles override it with incremental structures;
//! the default falls back to value differences.

mod adapters;
pub(crate) mod base;
mod config;
pub mod diagnostics;

use std::sync::Arc;

pub use adapters::{contract, negate, shift, Contracted, Negated, Shifted};
pub use base::{
    duality_gap, duality_gap_with_vertex, edmonds_greedy, lmo, lmo_order, prefix_values,
    BasePoint,
};
pub use config::{SolverConfig, StepRule, Tolerances, TraceObjective};

use crate::error::{Error, Result};

/// Elements `0..n` with optional external labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let mut seen = std::collections::HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidParameter(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet {
            n: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Restriction to the listed elements, in that order.
    pub(crate) fn restrict(&self, kept: &[usize]) -> Result<Self> {
        if kept.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        Ok(GroundSet {
            n: kept.len(),
            labels: self
                .labels
                .as_ref()
                .map(|l| kept.iter().map(|&i| l[i].clone()).collect()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Submodular,
    Supermodular,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Submodular => Orientation::Supermodular,
            Orientation::Supermodular => Orientation::Submodular,
        }
    }

    /// `+1` for supermodular, `-1` for submodular. Multiplying a peel key by
    /// this sign turns every peeling rule into a minimization.
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Submodular => -1.0,
            Orientation::Supermodular => 1.0,
        }
    }
}

/// A normalized set function `f: 2^V -> R` with `f(∅) = 0`.
pub trait SetFunction: Send + Sync {
    fn ground(&self) -> &GroundSet;

    fn orientation(&self) -> Orientation;

    /// `f(S)` for a nonempty `S`. Callers go through [`SetFunction::value`],
    /// which answers the empty set without reaching this method.
    fn eval(&self, members: &[bool]) -> f64;

    fn len(&self) -> usize {
        self.ground().len()
    }

    fn value(&self, members: &[bool]) -> f64 {
        debug_assert_eq!(members.len(), self.len());
        if members.iter().any(|&b| b) {
            self.eval(members)
        } else {
            0.0
        }
    }

    /// `f(v | S - v)` for `v ∈ S`.
    fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
        debug_assert!(members[v]);
        let mut without = members.to_vec();
        without[v] = false;
        self.value(members) - self.value(&without)
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        Box::new(ValuePeeler::new(self))
    }
}

/// Incremental removal state starting at `S = V`.
pub trait Peeler {
    /// `f(v | S - v)` for `v` still in `S`.
    fn marginal(&mut self, v: usize) -> f64;

    /// Removes `v` from `S` and appends every element whose marginal may
    /// have changed to `touched` (duplicates and removed elements allowed).
    fn remove(&mut self, v: usize, touched: &mut Vec<usize>);
}

/// Fallback peeler driven by value differences. Every removal invalidates
/// all marginals, so a full peel costs `O(n^2)` oracle calls.
pub struct ValuePeeler<'a, F: SetFunction + ?Sized> {
    oracle: &'a F,
    members: Vec<bool>,
    value: f64,
}

impl<'a, F: SetFunction + ?Sized> ValuePeeler<'a, F> {
    pub fn new(oracle: &'a F) -> Self {
        let members = vec![true; oracle.len()];
        let value = oracle.value(&members);
        ValuePeeler {
            oracle,
            members,
            value,
        }
    }
}

impl<F: SetFunction + ?Sized> Peeler for ValuePeeler<'_, F> {
    fn marginal(&mut self, v: usize) -> f64 {
        self.members[v] = false;
        let without = self.oracle.value(&self.members);
        self.members[v] = true;
        self.value - without
    }

    fn remove(&mut self, v: usize, touched: &mut Vec<usize>) {
        self.members[v] = false;
        self.value = self.oracle.value(&self.members);
        touched.extend((0..self.members.len()).filter(|&u| self.members[u]));
    }
}

macro_rules! forward_set_function {
    ($($ty:ty),*) => {$(
        impl<F: SetFunction + ?Sized> SetFunction for $ty {
            fn ground(&self) -> &GroundSet {
                (**self).ground()
            }
            fn orientation(&self) -> Orientation {
                (**self).orientation()
            }
            fn eval(&self, members: &[bool]) -> f64 {
                (**self).eval(members)
            }
            fn value(&self, members: &[bool]) -> f64 {
                (**self).value(members)
            }
            fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
                (**self).marginal_of_removal(v, members)
            }
            fn peeler(&self) -> Box<dyn Peeler + '_> {
                (**self).peeler()
            }
        }
    )*};
}

forward_set_function!(&F, Box<F>, Arc<F>);

/// Membership mask for a list of elements.
pub fn mask_of(n: usize, elements: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &e in elements {
        m[e] = true;
    }
    m
}

/// Sorted element list of a mask.
pub fn elements_of(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// `f(S)` for an element list.
pub fn value_of<F: SetFunction + ?Sized>(oracle: &F, elements: &[usize]) -> f64 {
    oracle.value(&mask_of(oracle.len(), elements))
}

#[cfg(test)]
pub(crate) mod testing {
    //! Small explicit oracles used by unit tests across the crate.
    use super::*;

    /// `f(S) = |E(S)|` over an explicit edge list.
    pub struct EdgeCount {
        pub ground: GroundSet,
        pub edges: Vec<(usize, usize)>,
    }

    impl EdgeCount {
        pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
            EdgeCount {
                ground: GroundSet::new(n).unwrap(),
                edges: edges.to_vec(),
            }
        }

        pub fn clique(n: usize) -> Self {
            let mut e = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    e.push((i, j));
                }
            }
            Self::new(n, &e)
        }
    }

    impl SetFunction for EdgeCount {
        fn ground(&self) -> &GroundSet {
            &self.ground
        }
        fn orientation(&self) -> Orientation {
            Orientation::Supermodular
        }
        fn eval(&self, m: &[bool]) -> f64 {
            self.edges.iter().filter(|&&(a, b)| m[a] && m[b]).count() as f64
        }
    }

    /// Every subset of `0..n` as a mask, including the empty set.
    pub fn all_masks(n: usize) -> impl Iterator<Item = Vec<bool>> {
        (0u32..1 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    #[test]
    fn ground_set_rejects_empty_and_duplicate_labels() {
        assert!(matches!(GroundSet::new(0), Err(Error::EmptyGroundSet)));
        assert!(GroundSet::with_labels(vec!["a".into(), "a".into()]).is_err());
        let g = GroundSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.restrict(&[1]).unwrap().labels().unwrap(), &["b".to_string()]);
    }

    #[test]
    fn empty_set_never_reaches_eval() {
        struct Panics(GroundSet);
        impl SetFunction for Panics {
            fn ground(&self) -> &GroundSet {
                &self.0
            }
            fn orientation(&self) -> Orientation {
                Orientation::Submodular
            }
            fn eval(&self, _: &[bool]) -> f64 {
                panic!("called on the empty set")
            }
        }
        let p = Panics(GroundSet::new(3).unwrap());
        assert_eq!(p.value(&[false; 3]), 0.0);
    }

    #[test]
    fn value_peeler_tracks_differences() {
        let k4 = EdgeCount::clique(4);
        let mut p = k4.peeler();
        assert_eq!(p.marginal(0), 3.0);
        let mut touched = Vec::new();
        p.remove(0, &mut touched);
        assert_eq!(p.marginal(1), 2.0);
        assert!(touched.contains(&1));
    }
}
