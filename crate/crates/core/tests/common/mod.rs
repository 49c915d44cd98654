//! Independent exhaustive oracles. Deliberately naive: plain enumeration,
//! no pruning, no code shared with the library's search.
#![allow(dead_code)]

use mincost_hom::solvers::FlowNetwork;
use mincost_hom::{Graph, Precolouring, WeightedInstance};

/// Every map `0..n -> 0..k` in lexicographic order.
pub fn all_maps(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (k > 0 || n == 0).then(|| vec![0; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut i = n;
        while i > 0 {
            i -= 1;
            if succ[i] + 1 < k {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    })
}

pub fn is_hom(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    map.len() == g.n()
        && map.iter().all(|&x| x < h.n())
        && g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
}

pub fn cost_of(inst: &WeightedInstance, map: &[usize]) -> u64 {
    (0..inst.g.n())
        .map(|v| inst.weight.get(v) * inst.cost.get(map[v]))
        .sum()
}

/// Lexicographically least optimal homomorphism and its cost.
pub fn min_cost(inst: &WeightedInstance) -> Option<(u64, Vec<usize>)> {
    let mut best: Option<(u64, Vec<usize>)> = None;
    for map in all_maps(inst.g.n(), inst.h.n()) {
        if is_hom(&inst.g, &inst.h, &map) {
            let c = cost_of(inst, &map);
            if best.as_ref().is_none_or(|(b, _)| c < *b) {
                best = Some((c, map));
            }
        }
    }
    best
}

pub fn hom_exists(g: &Graph, h: &Graph) -> bool {
    all_maps(g.n(), h.n()).any(|m| is_hom(g, h, &m))
}

pub fn extension_exists(g: &Graph, h: &Graph, pre: &Precolouring) -> bool {
    all_maps(g.n(), h.n()).any(|m| pre.iter().all(|(v, x)| m[v] == x) && is_hom(g, h, &m))
}

/// Lexicographically least injective map preserving edges and non-edges.
pub fn induced_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    all_maps(pattern.n(), host.n()).find(|m| {
        let mut s = m.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == m.len()
            && (0..pattern.n()).all(|i| {
                (i + 1..pattern.n()).all(|j| pattern.has_edge(i, j) == host.has_edge(m[i], m[j]))
            })
    })
}

/// Minimum over all source/sink cuts.
pub fn min_cut(net: &FlowNetwork) -> u128 {
    let n = net.nodes();
    let mut best = u128::MAX;
    for mask in 0u32..1 << n {
        let side: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if side[net.source()] && !side[net.sink()] {
            best = best.min(net.cut_capacity(&side));
        }
    }
    best
}

pub fn max_independent_set(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Bipartite graph with sides `0..a`, `a..a+b` and cross edges chosen by `mask`.
pub fn bipartite_from_mask(a: usize, b: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                edges.push((i, a + j));
            }
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

/// All labelled simple graphs on `n` vertices with at least one edge that are bipartite.
pub fn labelled_bipartite_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (1u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
        .filter(|g| mincost_hom::bipartition(g).is_some())
        .collect()
}
