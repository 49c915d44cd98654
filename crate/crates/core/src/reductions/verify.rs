//! Runs a reduction and both oracles on one seed instance.

use std::time::{Duration, Instant};

use super::{
    claw_witness_hom, cycle_witness_hom, eliminate_weights, lift_hom, reduce_claw, reduce_hexagon,
    reduce_long_cycle, DEFAULT_WEIGHT_CAP,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{validate_hom, Precolouring, WeightedInstance};
use crate::recognition::PatternEmbedding;
use crate::solvers::{
    brute_force_min_cost_with, max_independent_set_with, solve_precolouring_with,
    Limits, MisInstance,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    Hexagon,
    LongCycle,
    Claw,
    Deweight,
}

#[derive(Clone, Debug)]
pub enum Seed {
    /// Pre-colouring extension; colours are vertices of `H` on the embedded cycle.
    Precolouring { g: Graph, pre: Precolouring },
    Mis(MisInstance),
    Weighted(WeightedInstance),
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub kind: ReductionKind,
    /// Answer of the source problem (extension exists, MIS >= k, or weighted
    /// instance feasible).
    pub source_yes: bool,
    /// Weighted optimum of the source, for weight elimination only.
    pub source_optimum: Option<u64>,
    pub target_optimum: Option<u64>,
    pub budget: Option<u64>,
    /// Extension, independent set, or optimal weighted map.
    pub source_witness: Option<Vec<usize>>,
    /// Lexicographically least optimal map of the reduced instance.
    pub target_witness: Option<Vec<usize>>,
    /// Whether the homomorphism built from the source witness validates
    /// within budget (or at the source optimum); `None` when there is no witness.
    pub forward_certificate: Option<bool>,
    pub agree: bool,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn target_yes(&self) -> bool {
        match (self.target_optimum, self.budget) {
            (Some(opt), Some(t)) => opt <= t,
            (Some(_), None) => true,
            _ => false,
        }
    }
}

/// Builds the reduced instance from `seed` and checks the equivalence.
///
/// `emb` is required for the gadget reductions and ignored for `Deweight`.
pub fn verify_reduction(
    kind: ReductionKind,
    seed: &Seed,
    h: &Graph,
    emb: Option<&PatternEmbedding>,
    limits: &Limits,
) -> Result<VerifyReport> {
    let start = Instant::now();
    let need_emb = || emb.ok_or_else(|| Error::Precondition("reduction needs an embedding".into()));
    let mut report = match (kind, seed) {
        (ReductionKind::Hexagon | ReductionKind::LongCycle, Seed::Precolouring { g, pre }) => {
            let emb = need_emb()?;
            let out = if kind == ReductionKind::Hexagon {
                reduce_hexagon(g, pre, h, emb)?
            } else {
                reduce_long_cycle(g, pre, h, emb)?
            };
            let cycle = Graph::cycle(emb.image.len());
            let pairs: Vec<(usize, usize)> = pre
                .iter()
                .map(|(v, x)| (v, emb.position_of(x).expect("checked by the reduction")))
                .collect();
            let on_cycle = Precolouring::from_pairs(&pairs, g, &cycle)?;
            let extension = solve_precolouring_with(g, &cycle, &on_cycle, limits)?;
            let forward = extension.as_ref().map(|f| certificate_ok(&out.instance, &cycle_witness_hom(&out, f)));
            finish_decision(kind, &out.instance, extension, forward, limits)?
        }
        (ReductionKind::Claw, Seed::Mis(mis)) => {
            let out = reduce_claw(mis, h, need_emb()?)?;
            let (set, size) = max_independent_set_with(mis, limits)?;
            let witness = (size >= mis.k).then(|| set[..mis.k].to_vec());
            let forward = witness
                .as_ref()
                .map(|s| certificate_ok(&out.instance, &claw_witness_hom(&out, mis, s)));
            finish_decision(kind, &out.instance, witness, forward, limits)?
        }
        (ReductionKind::Deweight, Seed::Weighted(inst)) => {
            let (blown, origin) = eliminate_weights(inst, DEFAULT_WEIGHT_CAP)?;
            let source = brute_force_min_cost_with(inst, limits)?;
            let target = brute_force_min_cost_with(&blown, limits)?;
            let forward = source.as_ref().map(|s| {
                validate_hom(&blown, &lift_hom(&origin, &s.map)).is_ok_and(|lifted| lifted.cost == s.cost)
            });
            let source_optimum = source.as_ref().map(|s| s.cost);
            let target_optimum = target.as_ref().map(|t| t.cost);
            VerifyReport {
                kind,
                source_yes: source.is_some(),
                source_optimum,
                target_optimum,
                budget: blown.budget,
                source_witness: source.map(|s| s.map),
                target_witness: target.map(|t| t.map),
                forward_certificate: forward,
                agree: source_optimum == target_optimum && forward != Some(false),
                elapsed: Duration::ZERO,
            }
        }
        _ => {
            return Err(Error::Precondition(format!(
                "seed does not match reduction kind {kind:?}"
            )))
        }
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn certificate_ok(inst: &WeightedInstance, map: &[usize]) -> bool {
    validate_hom(inst, map).is_ok_and(|hom| inst.budget.is_none_or(|t| hom.cost <= t))
}

fn finish_decision(
    kind: ReductionKind,
    reduced: &WeightedInstance,
    source_witness: Option<Vec<usize>>,
    forward: Option<bool>,
    limits: &Limits,
) -> Result<VerifyReport> {
    let target = brute_force_min_cost_with(reduced, limits)?;
    let target_optimum = target.as_ref().map(|t| t.cost);
    let mut report = VerifyReport {
        kind,
        source_yes: source_witness.is_some(),
        source_optimum: None,
        target_optimum,
        budget: reduced.budget,
        source_witness,
        target_witness: target.map(|t| t.map),
        forward_certificate: forward,
        agree: false,
        elapsed: Duration::ZERO,
    };
    report.agree = report.source_yes == report.target_yes() && forward != Some(false);
    Ok(report)
}
