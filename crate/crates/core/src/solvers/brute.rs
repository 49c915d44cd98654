use super::search::Engine;
use super::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{validate_hom, Homomorphism, Precolouring, WeightedInstance};

/// Exact minimum-cost homomorphism for an arbitrary target.
///
/// Runs branch and bound to find the optimum value, then a second
/// index-ordered pass bounded by that value, so the returned map is the
/// lexicographically least optimal one. `None` iff no homomorphism exists.
pub fn brute_force_min_cost(inst: &WeightedInstance) -> Result<Option<Homomorphism>> {
    brute_force_min_cost_with(inst, &Limits::default())
}

pub fn brute_force_min_cost_with(
    inst: &WeightedInstance,
    limits: &Limits,
) -> Result<Option<Homomorphism>> {
    limits.check_brute_force(&inst.g)?;
    let engine = Engine::new(&inst.g, &inst.h, unit_costs(inst)?)?;
    let Some(opt) = engine.optimum(engine.full_domains()) else {
        return Ok(None);
    };
    let map = engine
        .first_within(engine.full_domains(), Some(opt))
        .expect("a map of optimal cost exists");
    let hom = validate_hom(inst, &map)?;
    debug_assert_eq!(hom.cost, opt);
    Ok(Some(hom))
}

/// Optimum value only; skips the lexicographic second pass.
pub fn brute_force_optimum(inst: &WeightedInstance, limits: &Limits) -> Result<Option<u64>> {
    limits.check_brute_force(&inst.g)?;
    let engine = Engine::new(&inst.g, &inst.h, unit_costs(inst)?)?;
    Ok(engine.optimum(engine.full_domains()))
}

fn unit_costs(inst: &WeightedInstance) -> Result<Vec<Vec<u64>>> {
    (0..inst.g.n())
        .map(|v| (0..inst.h.n()).map(|x| inst.unit_cost(v, x)).collect())
        .collect()
}

/// Extends a pre-colouring to a homomorphism `g -> h`, if possible.
///
/// Pre-coloured vertices are fixed; the lexicographically least extension is
/// returned.
pub fn solve_precolouring(g: &Graph, h: &Graph, pre: &Precolouring) -> Result<Option<Vec<usize>>> {
    solve_precolouring_with(g, h, pre, &Limits::default())
}

pub fn solve_precolouring_with(
    g: &Graph,
    h: &Graph,
    pre: &Precolouring,
    limits: &Limits,
) -> Result<Option<Vec<usize>>> {
    limits.check_brute_force(g)?;
    let engine = Engine::new(g, h, vec![vec![0; h.n()]; g.n()])?;
    let mut dom = engine.full_domains();
    for (v, x) in pre.iter() {
        if v >= g.n() {
            return Err(Error::Precondition(format!("precoloured vertex {v} not in G")));
        }
        if x >= h.n() {
            return Err(Error::ImageOutOfRange { vertex: v, image: x });
        }
        dom[v] = 1 << x;
    }
    Ok(engine.first_within(dom, None))
}
