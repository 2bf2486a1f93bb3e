//! Rounding approximate minimum-norm points into discrete answers, the
//! Dinkelbach density-improvement driver and the dense decomposition.

mod decomposition;
mod dinkelbach;
mod membership;
pub(crate) mod rounding;

pub use decomposition::{dense_decomposition, Block, Decomposition};
pub use dinkelbach::{dinkelbach, DinkelbachRun, Lambda};
pub use membership::{membership_decide, MembershipAnswer, MembershipMethod};
pub use rounding::{
    best_prefix, best_prefix_dense, best_prefix_sparse, sfm_extract, threshold_set, Extracted,
};

/// A nonempty set with its value and ratio `f(S)/|S|`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSolution {
    /// Sorted ascending.
    pub set: Vec<usize>,
    pub ratio: f64,
    pub f_value: f64,
}

impl RatioSolution {
    pub fn new(mut set: Vec<usize>, f_value: f64) -> Self {
        assert!(!set.is_empty(), "ratio solutions are nonempty");
        set.sort_unstable();
        let ratio = f_value / set.len() as f64;
        RatioSolution {
            set,
            ratio,
            f_value,
        }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}
