//! Ratio and minimum-norm-point optimization over sub- and supermodular
//! set functions.
//!
//! The core abstraction is [`setfn::SetFunction`]. Concrete oracles live in
//! [`problems`]; [`universal`] holds the solvers that work on any oracle
//! (SuperGreedy++, Frank-Wolfe, Fujishige-Wolfe); [`extract`] rounds their
//! output into sets; [`flow`] has the exact max-flow based solvers that
//! serve as ground truth; [`brute`] enumerates small instances.

pub mod brute;
pub mod cli;
pub mod error;
pub mod extract;
pub mod flow;
pub mod fmt;
pub mod problems;
pub mod setfn;
pub(crate) mod textio;
pub mod universal;

pub use error::{Error, Result};
