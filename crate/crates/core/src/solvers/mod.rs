//! Exact solvers and the oracles used to check reductions.

mod brute;
mod flow;
mod mincut;
mod mis;
mod search;

pub use brute::{
    brute_force_min_cost, brute_force_min_cost_with, brute_force_optimum, solve_precolouring,
    solve_precolouring_with,
};
pub use flow::{max_flow, Arc, FlowNetwork, MaxFlow};
pub use mincut::{
    build_flow_network, min_cut_min_cost, min_cut_min_cost_with, min_cut_min_cost_with_ordering,
    Alignment, HomNetwork,
};
pub use mis::{max_independent_set_3partite, max_independent_set_with, MisInstance};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Homomorphism, WeightedInstance};
use crate::recognition::{find_min_max_ordering, is_proper_interval_bigraph, DEFAULT_ORDERING_CAP};

/// Size guards for the exponential procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum |V(G)| for brute force and pre-colouring extension.
    pub brute_force_vertices: usize,
    /// Maximum |V(G)| for the independent set solver.
    pub mis_vertices: usize,
    /// Maximum side size for the exhaustive min-max ordering search.
    pub ordering_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_force_vertices: 24,
            mis_vertices: 40,
            ordering_cap: DEFAULT_ORDERING_CAP,
        }
    }
}

impl Limits {
    pub fn with_brute_force_vertices(mut self, max: usize) -> Self {
        self.brute_force_vertices = max;
        self
    }

    pub(crate) fn check_brute_force(&self, g: &Graph) -> Result<()> {
        if g.n() > self.brute_force_vertices {
            return Err(Error::SizeGuard {
                what: "brute-force input vertices",
                limit: self.brute_force_vertices,
                found: g.n(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverChoice {
    /// Min-cut when the target is a proper interval bigraph, brute force otherwise.
    Auto,
    BruteForce,
    MinCut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverUsed {
    BruteForce,
    MinCut,
}

/// Optimal homomorphism with the requested solver; reports which one ran.
pub fn solve(
    inst: &WeightedInstance,
    choice: SolverChoice,
    limits: &Limits,
) -> Result<(Option<Homomorphism>, SolverUsed)> {
    match choice {
        SolverChoice::BruteForce => {
            Ok((brute_force_min_cost_with(inst, limits)?, SolverUsed::BruteForce))
        }
        SolverChoice::MinCut => Ok((min_cut_min_cost_with(inst, limits)?, SolverUsed::MinCut)),
        SolverChoice::Auto => {
            if is_proper_interval_bigraph(&inst.h).member {
                if let Ok(Some(ord)) = find_min_max_ordering(&inst.h, limits.ordering_cap) {
                    return Ok((
                        min_cut_min_cost_with_ordering(inst, &ord)?,
                        SolverUsed::MinCut,
                    ));
                }
            }
            Ok((brute_force_min_cost_with(inst, limits)?, SolverUsed::BruteForce))
        }
    }
}

/// Is there a homomorphism of weighted cost at most the instance budget?
pub fn decide(inst: &WeightedInstance) -> Result<bool> {
    decide_with(inst, &Limits::default())
}

pub fn decide_with(inst: &WeightedInstance, limits: &Limits) -> Result<bool> {
    let budget = inst
        .budget
        .ok_or_else(|| Error::Precondition("decision needs a budget".into()))?;
    Ok(optimum_with(inst, limits)?.is_some_and(|opt| opt <= budget))
}

/// Optimal value, dispatching like [`SolverChoice::Auto`].
pub fn optimum_with(inst: &WeightedInstance, limits: &Limits) -> Result<Option<u64>> {
    if is_proper_interval_bigraph(&inst.h).member {
        if let Ok(Some(ord)) = find_min_max_ordering(&inst.h, limits.ordering_cap) {
            return Ok(min_cut_min_cost_with_ordering(inst, &ord)?.map(|h| h.cost));
        }
    }
    brute_force_optimum(inst, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decide_examples() {
        let inst = WeightedInstance::new(Graph::path(2), Graph::path(2), vec![1, 2], None, Some(3))
            .unwrap();
        assert!(decide(&inst).unwrap());
        assert!(!decide(&inst.clone().with_budget(Some(2))).unwrap());
        assert!(decide(&inst.clone().with_budget(None)).is_err());
        let odd =
            WeightedInstance::new(Graph::cycle(5), Graph::cycle(6), vec![0; 6], None, Some(1000))
                .unwrap();
        assert!(!decide(&odd).unwrap());
    }

    #[test]
    fn auto_picks_min_cut_for_pib() {
        let inst =
            WeightedInstance::new(Graph::path(3), Graph::path(4), vec![3, 1, 4, 1], None, None)
                .unwrap();
        let (hom, used) = solve(&inst, SolverChoice::Auto, &Limits::default()).unwrap();
        assert_eq!(used, SolverUsed::MinCut);
        let brute = brute_force_min_cost(&inst).unwrap().unwrap();
        assert_eq!(hom.unwrap().cost, brute.cost);
    }
}
