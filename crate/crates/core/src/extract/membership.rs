use crate::error::Result;
use crate::flow::{membership_max_violation, MaxFlowEngine};
use crate::problems::{MembershipInstance, MembershipOracle};
use crate::setfn::{SolverConfig, TraceObjective};
use crate::universal::{solve_observed, Algorithm};

/// How to decide `y ∈ B(|E(.)|)`.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipMethod {
    /// One minimum cut; exact.
    Flow(MaxFlowEngine),
    /// Enumeration, `n <= 20`; exact.
    Brute,
    /// A universal solver with dense-prefix extraction on `h = f - y`. Can
    /// only prove `NO`.
    Universal { algo: Algorithm, cfg: SolverConfig },
}

#[derive(Debug, Clone, PartialEq)]
pub enum MembershipAnswer {
    Yes,
    No {
        witness: Vec<usize>,
        /// `h(witness) > 0`.
        violation: f64,
        /// Solver iteration at which the witness appeared.
        iteration: Option<usize>,
    },
    /// Budget exhausted without a witness.
    Undecided { gap: f64 },
}

impl MembershipAnswer {
    pub fn is_no(&self) -> bool {
        matches!(self, MembershipAnswer::No { .. })
    }
}

/// Decides membership through `h(S) = |E(S)| - y(S)`: `y` is in the base
/// polytope iff `h(S) <= 0` for every `S` (given `y(V) = |E|`).
pub fn membership_decide(oracle: &MembershipOracle<'_>, method: &MembershipMethod) -> Result<MembershipAnswer> {
    let tol = 1e-9 * (1.0 + oracle.graph().total_weight());
    let verdict = |violation: f64, witness: Vec<usize>, iteration| {
        if violation > tol {
            MembershipAnswer::No {
                witness,
                violation,
                iteration,
            }
        } else {
            MembershipAnswer::Yes
        }
    };
    match method {
        MembershipMethod::Flow(engine) => {
            let mi = MembershipInstance::new(oracle.graph().clone(), oracle.y())?;
            let (violation, witness) = membership_max_violation(&mi, *engine)?;
            Ok(verdict(violation, witness, None))
        }
        MembershipMethod::Brute => {
            let best = crate::brute::brute_max_value(oracle)?;
            Ok(verdict(best.value, best.set, None))
        }
        MembershipMethod::Universal { algo, cfg } => {
            let cfg = SolverConfig {
                objective: Some(TraceObjective::DenseRatio),
                ..cfg.clone()
            };
            let mut found = None;
            let out = solve_observed(oracle, *algo, &cfg, |p| {
                if p.best.f_value > tol && found.is_none() {
                    found = Some(p.iter);
                }
                found.is_some()
            })?;
            match found {
                Some(iter) => Ok(MembershipAnswer::No {
                    violation: out.best.f_value,
                    witness: out.best.set,
                    iteration: Some(iter),
                }),
                None => Ok(MembershipAnswer::Undecided { gap: out.gap }),
            }
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::testing::*;
    use crate::problems::{membership_oracle, perturb_membership};

    fn methods() -> Vec<MembershipMethod> {
        vec![
            MembershipMethod::Flow(MaxFlowEngine::PushRelabel),
            MembershipMethod::Brute,
        ]
    }

    #[test]
    fn triangle_yes_and_no() {
        let k3 = clique(3);
        let yes = MembershipInstance::new(k3.clone(), vec![1.0; 3]).unwrap();
        let no = MembershipInstance::new(k3, vec![0.4, 0.5, 2.1]).unwrap();
        for m in methods() {
            assert_eq!(membership_decide(&membership_oracle(&yes), &m).unwrap(), MembershipAnswer::Yes);
            match membership_decide(&membership_oracle(&no), &m).unwrap() {
                MembershipAnswer::No { witness, violation, .. } => {
                    assert_eq!(witness, vec![0, 1]);
                    assert!((violation - 0.1).abs() < 1e-12);
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn universal_never_answers_yes() {
        let k3 = clique(3);
        let yes = MembershipInstance::new(k3, vec![1.0; 3]).unwrap();
        for algo in Algorithm::ALL {
            let m = MembershipMethod::Universal {
                algo,
                cfg: SolverConfig::with_iters(20),
            };
            assert!(matches!(
                membership_decide(&membership_oracle(&yes), &m).unwrap(),
                MembershipAnswer::Undecided { .. }
            ));
        }
    }

    #[test]
    fn perturbed_instances_are_caught() {
        let g = triangle_pendant();
        let p = perturb_membership(&g, 1.0).unwrap();
        for algo in Algorithm::ALL {
            let m = MembershipMethod::Universal {
                algo,
                cfg: SolverConfig::with_iters(200),
            };
            let ans = membership_decide(&membership_oracle(&p.instance), &m).unwrap();
            assert!(ans.is_no(), "{algo:?}: {ans:?}");
        }
    }
}
