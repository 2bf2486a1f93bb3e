use std::io::Write;

use super::RatioSolution;
use crate::error::{Error, Result};
use crate::fmt::num;
use crate::setfn::{contract, negate, Orientation, SetFunction};

#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    /// Sorted ascending.
    pub elements: Vec<usize>,
    pub level: f64,
}

/// Ordered blocks partitioning `V`; densest first for supermodular
/// functions, sparsest first for submodular ones.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Decomposition {
    pub blocks: Vec<Block>,
}

impl Decomposition {
    /// `x_v = λ_i` for `v ∈ S_i`.
    pub fn induced_vector(&self, n: usize) -> Vec<f64> {
        let mut x = vec![f64::NAN; n];
        for b in &self.blocks {
            for &v in &b.elements {
                x[v] = b.level;
            }
        }
        x
    }

    /// `block_id,level,element` rows, block ids from zero.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "block_id,level,element")?;
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in &b.elements {
                writeln!(out, "{i},{},{v}", num(b.level))?;
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }

    /// Adjacent blocks with levels within `1e-7 (1 + |λ|)` become one, at the
    /// level of their union.
    pub(crate) fn merge_ties<F: SetFunction + ?Sized>(&mut self, oracle: &F) {
        let mut merged: Vec<Block> = Vec::with_capacity(self.blocks.len());
        let mut prefix = vec![false; oracle.len()];
        let mut f_prefix = 0.0;
        let mut f_before_last = 0.0;
        for b in self.blocks.drain(..) {
            for &v in &b.elements {
                prefix[v] = true;
            }
            let f_now = oracle.value(&prefix);
            match merged.last_mut() {
                Some(last) if (last.level - b.level).abs() < 1e-7 * (1.0 + last.level.abs()) => {
                    last.elements.extend(&b.elements);
                    last.elements.sort_unstable();
                    last.level = (f_now - f_before_last) / last.elements.len() as f64;
                }
                _ => {
                    f_before_last = f_prefix;
                    merged.push(b);
                }
            }
            f_prefix = f_now;
        }
        self.blocks = merged;
    }
}

/// Peels off the densest set of `f`, contracts it, and repeats until the
/// ground set is exhausted. `solver` must return an exact densest set of the
/// supermodular function it is given. Submodular inputs are decomposed
/// sparsest-first through their negation.
pub fn dense_decomposition<F, S>(oracle: &F, mut solver: S) -> Result<Decomposition>
where
    F: SetFunction + ?Sized,
    S: FnMut(&dyn SetFunction) -> Result<RatioSolution>,
{
    if oracle.orientation() == Orientation::Submodular {
        let neg = negate(oracle);
        let mut d = decompose(&neg, &mut solver)?;
        for b in &mut d.blocks {
            b.level = -b.level;
        }
        return Ok(d);
    }
    decompose(oracle, &mut solver)
}

fn decompose<F, S>(oracle: &F, solver: &mut S) -> Result<Decomposition>
where
    F: SetFunction + ?Sized,
    S: FnMut(&dyn SetFunction) -> Result<RatioSolution>,
{
    let n = oracle.len();
    let mut done: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    while done.len() < n {
        let c = contract(oracle, &done)?;
        let sol = solver(&c)?;
        if sol.set.is_empty() || sol.set.iter().any(|&v| v >= c.len()) {
            return Err(Error::Internal("ratio solver returned an invalid set".into()));
        }
        let mut elements: Vec<usize> = sol.set.iter().map(|&i| c.kept()[i]).collect();
        elements.sort_unstable();
        done.extend(&elements);
        blocks.push(Block {
            elements,
            level: sol.ratio,
        });
    }
    let mut d = Decomposition { blocks };
    d.merge_ties(oracle);
    Ok(d)
}
