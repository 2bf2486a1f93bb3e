use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative factor for sum checks: `tau_base = base * (1 + |f(V)|)`.
    pub base: f64,
    /// Convex-combination weights at or below this are dropped.
    pub drop: f64,
    /// Slack for exact comparisons; zero means bitwise comparison.
    pub tie: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            base: 1e-9,
            drop: 1e-10,
            tie: 0.0,
        }
    }
}

impl Tolerances {
    pub fn tau_base(&self, f_of_v: f64) -> f64 {
        self.base * (1.0 + f_of_v.abs())
    }
}

/// Averaging rule of SuperGreedy++.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StepRule {
    /// `x_t = (1 - 1/(t+1)) x_{t-1} + d_t/(t+1)`.
    #[default]
    Harmonic,
    /// `x_t = (1 - 2/(t+2)) x_{t-1} + 2 d_t/(t+2)`.
    Standard,
}

impl StepRule {
    pub fn rate(self, t: usize) -> f64 {
        let t = t as f64;
        match self {
            StepRule::Harmonic => 1.0 / (t + 1.0),
            StepRule::Standard => 2.0 / (t + 2.0),
        }
    }
}

/// Which discrete answer the solver traces as `best_obj`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceObjective {
    /// `max f(S)/|S|`.
    DenseRatio,
    /// `min f(S)/|S|`.
    SparseRatio,
    /// `min f(S)`, the empty set included.
    MinValue,
}

impl TraceObjective {
    pub fn maximizes(self) -> bool {
        matches!(self, TraceObjective::DenseRatio)
    }

    /// `true` if `a` is strictly better than `b`.
    pub fn improves(self, a: f64, b: f64) -> bool {
        if self.maximizes() {
            a > b
        } else {
            a < b
        }
    }

    pub fn worst(self) -> f64 {
        if self.maximizes() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Iteration budget `T` (major cycles for Fujishige-Wolfe).
    pub max_iters: usize,
    /// Target accuracy; a run stops once the duality gap is at most `eps^2`.
    /// Zero disables early stopping for SuperGreedy++ and Frank-Wolfe.
    pub eps: f64,
    /// Duality gaps are evaluated every `trace_every` iterations and at the end.
    pub trace_every: usize,
    pub tolerances: Tolerances,
    pub step_rule: StepRule,
    /// Defaults to dense ratio for supermodular, minimum value for submodular.
    pub objective: Option<TraceObjective>,
    /// Record zero elapsed time so traces are byte-reproducible.
    pub logical_clock: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iters: 100,
            eps: 0.0,
            trace_every: 1,
            tolerances: Tolerances::default(),
            step_rule: StepRule::Harmonic,
            objective: None,
            logical_clock: false,
        }
    }
}

impl SolverConfig {
    pub fn with_iters(max_iters: usize) -> Self {
        SolverConfig {
            max_iters,
            ..Default::default()
        }
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    /// Gap cadence by instance size: every iteration up to `10^4` elements,
    /// every tenth above.
    pub fn trace_every_for(n: usize) -> usize {
        if n <= 10_000 {
            1
        } else {
            10
        }
    }

    pub fn target_gap(&self) -> f64 {
        self.eps * self.eps
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::InvalidParameter("max_iters must be at least 1".into()));
        }
        if self.eps < 0.0 || !self.eps.is_finite() {
            return Err(Error::InvalidParameter(format!("eps must be >= 0, got {}", self.eps)));
        }
        if self.trace_every == 0 {
            return Err(Error::InvalidParameter("trace_every must be at least 1".into()));
        }
        Ok(())
    }
}
