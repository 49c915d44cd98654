//! Pre-colouring extension to an induced even cycle `C` of `H`, reduced to
//! the weighted constrained-cost problem on `H`.
//!
//! Every pre-coloured vertex `v` with colour `t` gets its own copy of `C`,
//! vertices `(v,1) .. (v,L)`, and `v` is joined to `(v,t-1)` and `(v,t+1)`
//! (indices mod `L`). Heavy weights on the gadget and matching costs on `C`
//! force every cheap homomorphism to map each gadget identically onto `C`,
//! which in turn pins `v` to `h_t`.

use super::{check_seed_size, ReductionOutput};
use crate::error::{Error, Result};
use crate::graph::{Graph, NamedGraphBuilder};
use crate::instance::{Precolouring, WeightedInstance};
use crate::recognition::{PatternEmbedding, PatternKind};

struct CycleParams {
    /// Weight of gadget vertex `(v, i+1)`.
    gadget_weights: Vec<u64>,
    /// Cost of `h_{i+1}`.
    cycle_costs: Vec<u64>,
    other_cost: u64,
    budget: u64,
}

fn mul(values: &[u64]) -> Result<u64> {
    values
        .iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x))
        .ok_or(Error::Overflow("gadget parameters"))
}

fn hexagon_params(n: u64) -> Result<CycleParams> {
    let n2 = mul(&[36, n, n])?;
    let budget = mul(&[180, n, n, n])?;
    let big = budget + 1;
    let six_n = mul(&[6, n])?;
    Ok(CycleParams {
        gadget_weights: vec![big, 1, n2, big, 1, six_n],
        cycle_costs: vec![0, n2, 1, 0, n2, six_n],
        other_cost: big,
        budget,
    })
}

fn long_cycle_params(n: u64, half: usize) -> Result<CycleParams> {
    let k = half as u64;
    let len = 2 * half;
    let heavy = mul(&[50, k, n, n])?;
    let mid = mul(&[8, k, n])?;
    let tail = mul(&[9, n])?;
    let mut gadget_weights = vec![heavy, 1, 1, heavy, 1];
    gadget_weights.resize(len, tail);
    let mut cycle_costs = vec![0, mid, mid, 0, mid];
    cycle_costs.resize(len, 1);
    Ok(CycleParams {
        gadget_weights,
        cycle_costs,
        other_cost: heavy,
        budget: heavy - 1,
    })
}

/// Hexagon gadget reduction: budget `T = 180 n^3`.
pub fn reduce_hexagon(
    g: &Graph,
    pre: &Precolouring,
    h: &Graph,
    emb: &PatternEmbedding,
) -> Result<ReductionOutput> {
    if emb.image.len() != 6 || !matches!(emb.kind, PatternKind::Hexagon | PatternKind::EvenCycle(6))
    {
        return Err(Error::Precondition("embedding must be an induced hexagon".into()));
    }
    check_seed_size(g)?;
    reduce_cycle(g, pre, h, emb, hexagon_params(g.n() as u64)?)
}

/// Long even cycle reduction for `C_{2k}`, `k >= 4`: budget `T = 50 k n^2 - 1`.
pub fn reduce_long_cycle(
    g: &Graph,
    pre: &Precolouring,
    h: &Graph,
    emb: &PatternEmbedding,
) -> Result<ReductionOutput> {
    let len = emb.image.len();
    if emb.kind != PatternKind::EvenCycle(len) || !len.is_multiple_of(2) {
        return Err(Error::Precondition("embedding must be an induced even cycle".into()));
    }
    if len < 8 {
        return Err(Error::Precondition(format!(
            "long cycle reduction needs a cycle of length at least 8, got {len}"
        )));
    }
    check_seed_size(g)?;
    reduce_cycle(g, pre, h, emb, long_cycle_params(g.n() as u64, len / 2)?)
}

fn reduce_cycle(
    g: &Graph,
    pre: &Precolouring,
    h: &Graph,
    emb: &PatternEmbedding,
    params: CycleParams,
) -> Result<ReductionOutput> {
    if !emb.is_valid_in(h) {
        return Err(Error::Precondition("cycle embedding is not induced in H".into()));
    }
    let len = emb.image.len();
    let mut colour = vec![None; g.n()];
    for (v, x) in pre.iter() {
        if v >= g.n() {
            return Err(Error::Precondition(format!("precoloured vertex {v} not in G")));
        }
        let pos = emb.position_of(x).ok_or_else(|| {
            Error::Precondition(format!("vertex {v} is precoloured {x}, which is off the cycle"))
        })?;
        colour[v] = Some(pos);
    }

    let mut b = NamedGraphBuilder::new();
    let mut weights = Vec::new();
    for v in 0..g.n() {
        b.add_vertex(format!("v{v}"))?;
        weights.push(1);
    }
    for &(u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for v in 0..g.n() {
        let Some(t) = colour[v] else { continue };
        let first = b.vertex_count();
        for i in 0..len {
            b.add_vertex(format!("(v{v},{})", i + 1))?;
            weights.push(params.gadget_weights[i]);
        }
        for i in 0..len {
            b.add_edge(first + i, first + (i + 1) % len)?;
        }
        b.add_edge(v, first + (t + len - 1) % len)?;
        b.add_edge(v, first + (t + 1) % len)?;
    }
    let (g2, names) = b.finish()?;

    let mut costs = vec![params.other_cost; h.n()];
    for (i, &x) in emb.image.iter().enumerate() {
        costs[x] = params.cycle_costs[i];
    }
    let instance = WeightedInstance::new(g2, h.clone(), costs, Some(weights), Some(params.budget))?;
    Ok(ReductionOutput {
        instance,
        names,
        embedding: emb.clone(),
    })
}

/// Homomorphism of the reduced graph built from an extension `f: G -> C`
/// (`f[v]` is a 0-based cycle position): copies follow `f`, every gadget maps
/// identically onto the embedded cycle.
pub fn cycle_witness_hom(out: &ReductionOutput, extension: &[usize]) -> Vec<usize> {
    let emb = &out.embedding;
    let len = emb.image.len();
    let mut map = vec![usize::MAX; out.instance.g.n()];
    for (v, &pos) in extension.iter().enumerate() {
        map[v] = emb.image[pos];
        for i in 0..len {
            if let Some(idx) = out.names.resolve(&format!("(v{v},{})", i + 1)) {
                map[idx] = emb.image[i];
            }
        }
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::validate_hom;
    use crate::recognition::embed_pattern;

    fn hexagon() -> (Graph, PatternEmbedding) {
        let c6 = Graph::cycle(6);
        let emb = embed_pattern(&c6, PatternKind::Hexagon).unwrap();
        (c6, emb)
    }

    #[test]
    fn hexagon_parameters_for_n2() {
        let (c6, emb) = hexagon();
        let g = Graph::path(2);
        let pre = Precolouring::from_pairs(&[(0, 0)], &g, &c6).unwrap();
        let out = reduce_hexagon(&g, &pre, &c6, &emb).unwrap();
        let inst = &out.instance;
        assert_eq!(inst.budget, Some(1440));
        let g1 = out.names.resolve("(v0,1)").unwrap();
        assert_eq!(inst.weight.get(g1), 1441);
        assert_eq!(inst.weight.get(out.names.resolve("(v0,3)").unwrap()), 144);
        assert_eq!(inst.weight.get(out.names.resolve("(v0,6)").unwrap()), 12);
        assert_eq!(inst.cost.as_slice(), &[0, 144, 1, 0, 144, 12]);
        assert_eq!(inst.g.n(), 2 + 6);
        // colour 1: attached to (v,6) and (v,2)
        assert!(inst.g.has_edge(0, out.names.resolve("(v0,6)").unwrap()));
        assert!(inst.g.has_edge(0, out.names.resolve("(v0,2)").unwrap()));
    }

    #[test]
    fn attachment_for_colour_three() {
        let (c6, emb) = hexagon();
        let g = Graph::path(2);
        let pre = Precolouring::from_pairs(&[(0, 2)], &g, &c6).unwrap();
        let out = reduce_hexagon(&g, &pre, &c6, &emb).unwrap();
        let nb: Vec<&str> = out.instance.g.neighbors(0).iter().map(|&x| out.names.name(x).unwrap()).collect();
        assert_eq!(nb, vec!["v1", "(v0,2)", "(v0,4)"]);
    }

    #[test]
    fn long_cycle_parameters_for_k4_n2() {
        let c8 = Graph::cycle(8);
        let emb = embed_pattern(&c8, PatternKind::EvenCycle(8)).unwrap();
        let g = Graph::path(2);
        let pre = Precolouring::from_pairs(&[(1, 5)], &g, &c8).unwrap();
        let out = reduce_long_cycle(&g, &pre, &c8, &emb).unwrap();
        let inst = &out.instance;
        assert_eq!(inst.budget, Some(799));
        assert_eq!(inst.cost.get(1), 64);
        assert_eq!(inst.cost.as_slice(), &[0, 64, 64, 0, 64, 1, 1, 1]);
        assert_eq!(inst.weight.get(out.names.resolve("(v1,6)").unwrap()), 18);
        assert_eq!(inst.weight.get(out.names.resolve("(v1,4)").unwrap()), 800);
    }

    #[test]
    fn rejects_bad_inputs() {
        let (c6, emb) = hexagon();
        let off = Graph::cycle(6).add_vertices(1).add_edges(&[(0, 6)]).unwrap();
        let g = Graph::path(2);
        let pre = Precolouring::from_pairs(&[(0, 6)], &g, &off).unwrap();
        assert!(reduce_hexagon(&g, &pre, &off, &emb).is_err());
        let single = Graph::empty(1);
        assert!(reduce_hexagon(&single, &Precolouring::new(), &c6, &emb).is_err());
        assert!(reduce_long_cycle(&g, &Precolouring::new(), &c6, &emb).is_err());
    }

    #[test]
    fn witness_is_within_budget() {
        let (c6, emb) = hexagon();
        let g = Graph::path(3);
        let pre = Precolouring::from_pairs(&[(0, 0), (2, 4)], &g, &c6).unwrap();
        let out = reduce_hexagon(&g, &pre, &c6, &emb).unwrap();
        let map = cycle_witness_hom(&out, &[0, 5, 4]);
        let hom = validate_hom(&out.instance, &map).unwrap();
        assert!(hom.cost <= out.instance.budget.unwrap());
    }
}
