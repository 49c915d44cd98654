//! Removing vertex weights by blowing each vertex up into twins.
//!
//! Vertex `v` of weight `w(v)` becomes `w(v)` pairwise non-adjacent copies,
//! and every copy of `u` is joined to every copy of `v` for each edge `uv`.
//!
//! The optimum is preserved. A homomorphism `f` of `G` lifts to the blow-up
//! by mapping every copy of `v` to `f(v)`, at cost `sum_v w(v) c(f(v))`.
//! Conversely, given a homomorphism `F` of the blow-up, pick for each `v` the
//! copy `v*` of lowest cost. Since copies of adjacent vertices are all
//! adjacent, `v -> F(v*)` is a homomorphism of `G`, and its weighted cost is
//! at most the cost of `F`. Feasibility is preserved in both directions by
//! the same two maps.

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::Graph;

/// Default cap on individual weights before blowing up.
pub const DEFAULT_WEIGHT_CAP: u64 = 1 << 12;

/// Unit-weight instance plus `origin[i]`, the vertex of the input whose copy
/// is vertex `i`. Costs and budget are unchanged. Copies of a vertex are
/// contiguous and ordered by original vertex.
pub fn eliminate_weights(inst: &WeightedInstance, cap: u64) -> Result<(WeightedInstance, Vec<usize>)> {
    let g = &inst.g;
    let mut first = Vec::with_capacity(g.n());
    let mut origin = Vec::new();
    for v in 0..g.n() {
        let w = inst.weight.get(v);
        if w > cap {
            return Err(Error::SizeGuard {
                what: "vertex weight",
                limit: cap as usize,
                found: w as usize,
            });
        }
        first.push(origin.len());
        origin.extend(std::iter::repeat_n(v, w as usize));
    }
    let copies = |v: usize| first[v]..first[v] + inst.weight.get(v) as usize;
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for a in copies(u) {
            for b in copies(v) {
                edges.push((a, b));
            }
        }
    }
    let blown = Graph::new(origin.len(), &edges)?;
    let out = WeightedInstance::new(
        blown,
        inst.h.clone(),
        inst.cost.as_slice().to_vec(),
        None,
        inst.budget,
    )?;
    Ok((out, origin))
}

/// Lift a homomorphism of the weighted instance to its blow-up.
pub fn lift_hom(origin: &[usize], map: &[usize]) -> Vec<usize> {
    origin.iter().map(|&v| map[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::brute_force_min_cost;

    #[test]
    fn unit_weights_are_identity() {
        let inst =
            WeightedInstance::new(Graph::cycle(4), Graph::path(3), vec![1, 0, 2], None, Some(3)).unwrap();
        let (out, origin) = eliminate_weights(&inst, DEFAULT_WEIGHT_CAP).unwrap();
        assert_eq!(out.g, inst.g);
        assert_eq!(origin, vec![0, 1, 2, 3]);
    }

    #[test]
    fn k2_becomes_k23() {
        let inst =
            WeightedInstance::new(Graph::path(2), Graph::path(2), vec![1, 5], Some(vec![2, 3]), None)
                .unwrap();
        let (out, origin) = eliminate_weights(&inst, DEFAULT_WEIGHT_CAP).unwrap();
        assert_eq!(out.g, Graph::complete_bipartite(2, 3));
        assert_eq!(origin, vec![0, 0, 1, 1, 1]);
        let weighted = brute_force_min_cost(&inst).unwrap().unwrap();
        let blown = brute_force_min_cost(&out).unwrap().unwrap();
        assert_eq!(weighted.cost, 2 * 5 + 3);
        assert_eq!(blown.cost, weighted.cost);
        assert_eq!(lift_hom(&origin, &weighted.map), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn cap_is_enforced() {
        let inst =
            WeightedInstance::new(Graph::path(2), Graph::path(2), vec![0, 0], Some(vec![1, 9]), None)
                .unwrap();
        assert!(matches!(eliminate_weights(&inst, 8), Err(Error::SizeGuard { .. })));
    }
}
