use super::{GroundSet, Orientation, Peeler, SetFunction};
use crate::error::{Error, Result};

/// `-f`, with the orientation flipped. `B(-f) = -B(f)`.
pub struct Negated<F> {
    inner: F,
}

pub fn negate<F: SetFunction>(inner: F) -> Negated<F> {
    Negated { inner }
}

impl<F> Negated<F> {
    pub fn inner(&self) -> &F {
        &self.inner
    }
}

impl<F: SetFunction> SetFunction for Negated<F> {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }

    fn orientation(&self) -> Orientation {
        self.inner.orientation().flip()
    }

    fn eval(&self, members: &[bool]) -> f64 {
        -self.inner.eval(members)
    }

    fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
        -self.inner.marginal_of_removal(v, members)
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        Box::new(NegatedPeeler(self.inner.peeler()))
    }
}

struct NegatedPeeler<'a>(Box<dyn Peeler + 'a>);

impl Peeler for NegatedPeeler<'_> {
    fn marginal(&mut self, v: usize) -> f64 {
        -self.0.marginal(v)
    }

    fn remove(&mut self, v: usize, touched: &mut Vec<usize>) {
        self.0.remove(v, touched)
    }
}

/// `g(S) = f(S) + c|S|`. A modular shift keeps the orientation and the
/// maximizers and minimizers of `f(S)/|S|`.
pub struct Shifted<F> {
    inner: F,
    c: f64,
}

pub fn shift<F: SetFunction>(inner: F, c: f64) -> Shifted<F> {
    Shifted { inner, c }
}

impl<F> Shifted<F> {
    pub fn offset(&self) -> f64 {
        self.c
    }
}

impl<F: SetFunction> SetFunction for Shifted<F> {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }

    fn orientation(&self) -> Orientation {
        self.inner.orientation()
    }

    fn eval(&self, members: &[bool]) -> f64 {
        let k = members.iter().filter(|&&b| b).count() as f64;
        self.inner.eval(members) + self.c * k
    }

    fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
        self.inner.marginal_of_removal(v, members) + self.c
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        Box::new(ShiftedPeeler(self.inner.peeler(), self.c))
    }
}

struct ShiftedPeeler<'a>(Box<dyn Peeler + 'a>, f64);

impl Peeler for ShiftedPeeler<'_> {
    fn marginal(&mut self, v: usize) -> f64 {
        self.0.marginal(v) + self.1
    }

    fn remove(&mut self, v: usize, touched: &mut Vec<usize>) {
        self.0.remove(v, touched)
    }
}

/// `f_A(S) = f(S ∪ A) - f(A)` over the ground set `V \ A`.
///
/// Element `i` of the contracted ground set is `kept()[i]` of the parent.
pub struct Contracted<F> {
    inner: F,
    ground: GroundSet,
    kept: Vec<usize>,
    to_child: Vec<Option<usize>>,
    contracted: Vec<bool>,
    f_of_a: f64,
}

/// Contracts the elements of `a` (parent indices) into `f`.
pub fn contract<F: SetFunction>(inner: F, a: &[usize]) -> Result<Contracted<F>> {
    let n = inner.len();
    let mut contracted = vec![false; n];
    for &v in a {
        if v >= n {
            return Err(Error::InvalidParameter(format!(
                "element {v} outside ground set of size {n}"
            )));
        }
        contracted[v] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !contracted[v]).collect();
    if kept.is_empty() {
        return Err(Error::EmptyGroundSet);
    }
    let mut to_child = vec![None; n];
    for (i, &v) in kept.iter().enumerate() {
        to_child[v] = Some(i);
    }
    let ground = inner.ground().restrict(&kept)?;
    let f_of_a = inner.value(&contracted);
    Ok(Contracted {
        inner,
        ground,
        kept,
        to_child,
        contracted,
        f_of_a,
    })
}

impl<F> Contracted<F> {
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }

    fn lift(&self, members: &[bool]) -> Vec<bool> {
        let mut m = self.contracted.clone();
        for (i, &b) in members.iter().enumerate() {
            if b {
                m[self.kept[i]] = true;
            }
        }
        m
    }
}

impl<F: SetFunction> SetFunction for Contracted<F> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn orientation(&self) -> Orientation {
        self.inner.orientation()
    }

    fn eval(&self, members: &[bool]) -> f64 {
        self.inner.value(&self.lift(members)) - self.f_of_a
    }

    fn marginal_of_removal(&self, v: usize, members: &[bool]) -> f64 {
        self.inner
            .marginal_of_removal(self.kept[v], &self.lift(members))
    }

    fn peeler(&self) -> Box<dyn Peeler + '_> {
        Box::new(ContractedPeeler {
            inner: self.inner.peeler(),
            kept: &self.kept,
            to_child: &self.to_child,
            scratch: Vec::new(),
        })
    }
}

struct ContractedPeeler<'a> {
    inner: Box<dyn Peeler + 'a>,
    kept: &'a [usize],
    to_child: &'a [Option<usize>],
    scratch: Vec<usize>,
}

impl Peeler for ContractedPeeler<'_> {
    fn marginal(&mut self, v: usize) -> f64 {
        self.inner.marginal(self.kept[v])
    }

    fn remove(&mut self, v: usize, touched: &mut Vec<usize>) {
        self.scratch.clear();
        self.inner.remove(self.kept[v], &mut self.scratch);
        touched.extend(self.scratch.iter().filter_map(|&u| self.to_child[u]));
    }
}
