//! Polynomial solver for proper interval bigraph targets.
//!
//! Each input vertex `v` whose image must lie on a side with positions
//! `0..p` (in min-max order) gets a chain `s = n_0 -> n_1 -> ... -> n_p = t`,
//! where `n_i` on the source side of the cut means "position of `v` is at
//! least `i`". Arc `n_j -> n_{j+1}` carries `w(v) * c(position j)`, so the
//! chain is cut exactly once, at the chosen position. Under a min-max
//! ordering the positions admitted along an edge form a monotone staircase,
//! which is exactly a conjunction of implications
//! `pos(u) >= a  =>  pos(v) >= b`; each implication becomes an infinite arc.

use super::flow::{max_flow, FlowNetwork};
use super::Limits;
use crate::error::{Error, Result};
use crate::graph::bipartition;
use crate::instance::{validate_hom, Homomorphism, WeightedInstance};
use crate::recognition::{find_min_max_ordering, is_proper_interval_bigraph, MinMaxOrdering};

/// Which side of the target each input vertex maps into; `None` leaves the
/// vertex out of the network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    pub target_side: Vec<Option<u8>>,
}

/// A flow network together with the data needed to read a homomorphism off
/// a minimum cut.
#[derive(Clone, Debug)]
pub struct HomNetwork {
    pub network: FlowNetwork,
    /// `1 + ` the sum of all finite capacities.
    pub infinity: u64,
    /// Candidate images of each included vertex, in min-max order.
    positions: Vec<Option<Vec<usize>>>,
    /// Node ids of `n_1 .. n_{p-1}` for each included vertex.
    chains: Vec<Vec<usize>>,
}

impl HomNetwork {
    /// Reads the image of every included vertex off a source side.
    pub fn read_map(&self, source_side: &[bool]) -> Vec<Option<usize>> {
        self.positions
            .iter()
            .zip(&self.chains)
            .map(|(pos, chain)| {
                pos.as_ref().map(|list| {
                    let at = chain.iter().take_while(|&&node| source_side[node]).count();
                    list[at]
                })
            })
            .collect()
    }
}

const SOURCE: usize = 0;
const SINK: usize = 1;

/// Builds the cut network for a fixed alignment. `Ok(None)` means the
/// alignment is infeasible before any flow is computed (an included vertex
/// has no candidate image, or an edge has no admissible pair).
pub fn build_flow_network(
    inst: &WeightedInstance,
    ord: &MinMaxOrdering,
    alignment: &Alignment,
) -> Result<Option<HomNetwork>> {
    let (g, h) = (&inst.g, &inst.h);
    ord.validate(h)?;
    if alignment.target_side.len() != g.n() {
        return Err(Error::Length {
            field: "alignment",
            expected: g.n(),
            found: alignment.target_side.len(),
        });
    }
    let sides = [&ord.order_x, &ord.order_y];
    let mut positions: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    for v in 0..g.n() {
        if let Some(s) = alignment.target_side[v] {
            // isolated target vertices cannot host a vertex that has an edge
            let list: Vec<usize> = sides[s as usize]
                .iter()
                .copied()
                .filter(|&x| g.degree(v) == 0 || h.degree(x) > 0)
                .collect();
            if list.is_empty() {
                return Ok(None);
            }
            positions[v] = Some(list);
        }
    }
    for &(u, v) in g.edges() {
        match (alignment.target_side[u], alignment.target_side[v]) {
            (Some(a), Some(b)) if a != b => {}
            (None, None) => {}
            _ => {
                return Err(Error::Precondition(format!(
                    "alignment does not split edge ({u}, {v}) across the target sides"
                )))
            }
        }
    }

    let mut next_node = 2;
    let chains: Vec<Vec<usize>> = positions
        .iter()
        .map(|pos| {
            let p = pos.as_ref().map_or(1, Vec::len);
            let ids: Vec<usize> = (next_node..next_node + p - 1).collect();
            next_node += p - 1;
            ids
        })
        .collect();
    let node = |v: usize, i: usize| -> usize {
        let p = positions[v].as_ref().unwrap().len();
        if i == 0 {
            SOURCE
        } else if i >= p {
            SINK
        } else {
            chains[v][i - 1]
        }
    };

    let mut finite = Vec::new();
    let mut infinite = Vec::new();
    for v in 0..g.n() {
        let Some(list) = &positions[v] else { continue };
        for (j, &x) in list.iter().enumerate() {
            finite.push((node(v, j), node(v, j + 1), inst.unit_cost(v, x)?));
        }
        for i in 1..list.len().saturating_sub(1) {
            infinite.push((node(v, i + 1), node(v, i)));
        }
    }
    for &(a, b) in g.edges() {
        if positions[a].is_none() {
            continue;
        }
        for (u, v) in [(a, b), (b, a)] {
            let (lu, lv) = (positions[u].as_ref().unwrap(), positions[v].as_ref().unwrap());
            let Some(lower) = staircase(h, lu, lv)? else {
                return Ok(None);
            };
            for (from_pos, to_pos) in lower.into_iter().enumerate() {
                match to_pos {
                    None => infinite.push((node(u, from_pos), SINK)),
                    Some(0) => {}
                    Some(b) => infinite.push((node(u, from_pos), node(v, b))),
                }
            }
        }
    }

    let finite_sum = finite
        .iter()
        .try_fold(0u64, |acc, &(_, _, c)| acc.checked_add(c))
        .ok_or(Error::Overflow("flow capacities"))?;
    let infinity = finite_sum
        .checked_add(1)
        .ok_or(Error::Overflow("flow capacities"))?;
    let mut network = FlowNetwork::new(next_node, SOURCE, SINK);
    for (from, to, c) in finite {
        network.add_arc(from, to, c)?;
    }
    for (from, to) in infinite {
        if from == SINK || to == SOURCE {
            continue;
        }
        network.add_arc(from, to, infinity)?;
    }
    Ok(Some(HomNetwork {
        network,
        infinity,
        positions,
        chains,
    }))
}

// For the edge relation between position lists `lu` and `lv`, returns for
// each lower bound `a` on pos(u) the implied lower bound on pos(v)
// (`None`: pos(u) >= a is impossible). `Ok(None)` when no pair is admissible.
// Errors if those implications do not carve out exactly the edge relation.
fn staircase(
    h: &crate::graph::Graph,
    lu: &[usize],
    lv: &[usize],
) -> Result<Option<Vec<Option<usize>>>> {
    let rel = |i: usize, j: usize| h.has_edge(lu[i], lv[j]);
    let lower_v = |a: usize| -> Option<usize> {
        (a..lu.len())
            .filter_map(|i| (0..lv.len()).find(|&j| rel(i, j)))
            .min()
    };
    let lower_u = |b: usize| -> Option<usize> {
        (b..lv.len())
            .filter_map(|j| (0..lu.len()).find(|&i| rel(i, j)))
            .min()
    };
    let forward: Vec<Option<usize>> = (0..lu.len()).map(lower_v).collect();
    if forward[0].is_none() {
        return Ok(None);
    }
    let backward: Vec<Option<usize>> = (0..lv.len()).map(lower_u).collect();
    for i in 0..lu.len() {
        for j in 0..lv.len() {
            let admitted = forward[..=i].iter().all(|lb| lb.is_some_and(|b| j >= b))
                && backward[..=j].iter().all(|lb| lb.is_some_and(|a| i >= a));
            if admitted != rel(i, j) {
                return Err(Error::InvalidOrdering(format!(
                    "edge relation is not a monotone staircase at ({}, {})",
                    lu[i], lv[j]
                )));
            }
        }
    }
    Ok(Some(forward))
}

/// Exact minimum-cost homomorphism when `inst.h` is a proper interval bigraph.
pub fn min_cut_min_cost(inst: &WeightedInstance) -> Result<Option<Homomorphism>> {
    min_cut_min_cost_with(inst, &Limits::default())
}

pub fn min_cut_min_cost_with(
    inst: &WeightedInstance,
    limits: &Limits,
) -> Result<Option<Homomorphism>> {
    if !is_proper_interval_bigraph(&inst.h).member {
        return Err(Error::NotProperIntervalBigraph);
    }
    let ord = find_min_max_ordering(&inst.h, limits.ordering_cap)?.ok_or_else(|| {
        Error::InvalidOrdering("no min-max ordering found for a proper interval bigraph".into())
    })?;
    min_cut_min_cost_with_ordering(inst, &ord)
}

/// Min-cut solve with a caller-supplied ordering. Each connected component
/// of G is solved under both alignments of its bipartition and the cheaper
/// one is kept.
pub fn min_cut_min_cost_with_ordering(
    inst: &WeightedInstance,
    ord: &MinMaxOrdering,
) -> Result<Option<Homomorphism>> {
    ord.validate(&inst.h)?;
    let Some(parts) = bipartition(&inst.g) else {
        return Ok(None);
    };
    let n = inst.g.n();
    let mut map = vec![usize::MAX; n];
    let mut total: u128 = 0;
    for comp in inst.g.components() {
        let mut best: Option<(u128, Vec<Option<usize>>)> = None;
        for flip in [0u8, 1u8] {
            let mut target_side = vec![None; n];
            for &v in &comp {
                target_side[v] = Some(parts.side(v) ^ flip);
            }
            let alignment = Alignment { target_side };
            let Some(net) = build_flow_network(inst, ord, &alignment)? else {
                continue;
            };
            let flow = max_flow(&net.network);
            if flow.value >= net.infinity as u128 {
                continue;
            }
            if best.as_ref().is_none_or(|(value, _)| flow.value < *value) {
                best = Some((flow.value, net.read_map(&flow.source_side)));
            }
        }
        let Some((value, part_map)) = best else {
            return Ok(None);
        };
        total += value;
        for &v in &comp {
            map[v] = part_map[v].expect("component vertex is included");
        }
    }
    let hom = validate_hom(inst, &map)?;
    if hom.cost as u128 != total {
        return Err(Error::InvalidOrdering(format!(
            "cut value {total} differs from the cost {} of the read-off map",
            hom.cost
        )));
    }
    Ok(Some(hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k2_on_k2() {
        let inst =
            WeightedInstance::new(Graph::path(2), Graph::path(2), vec![1, 2], None, None).unwrap();
        assert_eq!(min_cut_min_cost(&inst).unwrap().unwrap().cost, 3);
        let ord = find_min_max_ordering(&inst.h, 8).unwrap().unwrap();
        let net = build_flow_network(
            &inst,
            &ord,
            &Alignment {
                target_side: vec![Some(0), Some(1)],
            },
        )
        .unwrap()
        .unwrap();
        let finite: Vec<_> = net
            .network
            .arcs()
            .iter()
            .filter(|a| a.capacity < net.infinity)
            .collect();
        assert_eq!(finite.len(), 2);
        assert_eq!(max_flow(&net.network).value, 3);
    }

    #[test]
    fn star_on_p4() {
        let star = Graph::complete_bipartite(1, 4);
        let inst =
            WeightedInstance::new(star, Graph::path(4), vec![0, 1, 0, 1], None, None).unwrap();
        let hom = min_cut_min_cost(&inst).unwrap().unwrap();
        assert_eq!(hom.cost, 1);
    }

    #[test]
    fn refuses_non_pib_target() {
        let inst =
            WeightedInstance::new(Graph::path(2), Graph::cycle(6), vec![0; 6], None, None).unwrap();
        assert_eq!(min_cut_min_cost(&inst), Err(Error::NotProperIntervalBigraph));
    }

    #[test]
    fn isolated_target_vertices_are_skipped() {
        // P3 plus an isolated free vertex 3 that must not host edge endpoints
        let h = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let inst = WeightedInstance::new(Graph::path(3), h, vec![5, 5, 5, 0], None, None).unwrap();
        let hom = min_cut_min_cost(&inst).unwrap().unwrap();
        assert_eq!(hom.cost, 15);
        let lone = WeightedInstance::new(
            Graph::empty(1),
            inst.h.clone(),
            vec![5, 5, 5, 0],
            None,
            None,
        )
        .unwrap();
        assert_eq!(min_cut_min_cost(&lone).unwrap().unwrap().map, vec![3]);
    }

    #[test]
    fn non_bipartite_input_is_infeasible() {
        let inst =
            WeightedInstance::new(Graph::cycle(3), Graph::path(4), vec![0; 4], None, None).unwrap();
        assert_eq!(min_cut_min_cost(&inst).unwrap(), None);
    }
}
