//! Gadget reductions into the weighted constrained-cost problem, and a
//! harness that checks each one against independent oracles.

mod claw;
mod cycle;
mod deweight;
mod verify;

pub use claw::{claw_witness_hom, reduce_claw, ClawBudget};
pub use cycle::{cycle_witness_hom, reduce_hexagon, reduce_long_cycle};
pub use deweight::{eliminate_weights, lift_hom, DEFAULT_WEIGHT_CAP};
pub use verify::{verify_reduction, ReductionKind, Seed, VerifyReport};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexNames};
use crate::instance::WeightedInstance;
use crate::recognition::PatternEmbedding;

/// A reduced instance `(G', c, w, T)` with names for the gadget vertices.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub instance: WeightedInstance,
    /// `v{i}` for copies of input vertices, `(v{i},{j})` for cycle gadgets
    /// (1-based `j`), `d_{u}_{v}` for subdivisions, `b_1..b_3`, `c_0..c_2`.
    pub names: VertexNames,
    pub embedding: PatternEmbedding,
}

fn check_seed_size(g: &Graph) -> Result<()> {
    if g.n() < 2 || g.m() < 1 {
        return Err(Error::Precondition(format!(
            "seed graph needs at least 2 vertices and 1 edge, got n = {}, m = {}",
            g.n(),
            g.m()
        )));
    }
    Ok(())
}
