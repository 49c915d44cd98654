//! Maximum independent set in 3-partite graphs (branch and bound on bitmasks).

use super::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A 3-partite graph with its parts given, plus a target size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisInstance {
    pub g: Graph,
    pub parts: [Vec<usize>; 3],
    pub k: usize,
}

impl MisInstance {
    /// Validates that the parts are disjoint, cover `g`, are independent,
    /// that `g` is non-empty and that the first part is non-empty.
    pub fn new(g: Graph, parts: [Vec<usize>; 3], k: usize) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::Precondition("3-partite graph must be non-empty".into()));
        }
        if parts[0].is_empty() {
            return Err(Error::Precondition("part V1 must be non-empty".into()));
        }
        let mut part_of = vec![usize::MAX; g.n()];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= g.n() {
                    return Err(Error::Precondition(format!("part vertex {v} not in G")));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::Precondition(format!("vertex {v} in two parts")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::Precondition(format!("vertex {v} is in no part")));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| part_of[u] == part_of[v]) {
            return Err(Error::Precondition(format!(
                "edge ({u}, {v}) lies inside part V{}",
                part_of[u] + 1
            )));
        }
        Ok(MisInstance { g, parts, k })
    }

    /// Index (0, 1 or 2) of the part containing `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.parts.iter().position(|p| p.contains(&v)).expect("parts cover G")
    }
}

/// Exact maximum independent set: branch on a maximum-degree vertex, bound
/// by a greedy clique cover of the remaining candidates.
pub fn max_independent_set_3partite(inst: &MisInstance) -> Result<(Vec<usize>, usize)> {
    max_independent_set_with(inst, &Limits::default())
}

pub fn max_independent_set_with(inst: &MisInstance, limits: &Limits) -> Result<(Vec<usize>, usize)> {
    let n = inst.g.n();
    if n > limits.mis_vertices {
        return Err(Error::SizeGuard {
            what: "independent set vertices",
            limit: limits.mis_vertices,
            found: n,
        });
    }
    let set = max_independent_set_mask(&inst.g);
    let members: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
    let size = members.len();
    Ok((members, size))
}

pub(crate) fn max_independent_set_mask(g: &Graph) -> u64 {
    assert!(g.n() <= 64);
    let nbr: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0u64;
    branch(&nbr, all, 0, &mut best);
    best
}

fn branch(nbr: &[u64], cand: u64, current: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + clique_cover(nbr, cand) <= best.count_ones() {
        return;
    }
    let v = mask_bits(cand)
        .max_by_key(|&v| ((nbr[v] & cand).count_ones(), std::cmp::Reverse(v)))
        .unwrap();
    if nbr[v] & cand == 0 {
        // remaining candidates are pairwise non-adjacent
        branch(nbr, 0, current | cand, best);
        return;
    }
    branch(nbr, cand & !nbr[v] & !(1 << v), current | 1 << v, best);
    branch(nbr, cand & !(1 << v), current, best);
}

// Greedy partition of `cand` into cliques; an upper bound on any independent set in it.
fn clique_cover(nbr: &[u64], cand: u64) -> u32 {
    let mut cliques: Vec<u64> = Vec::new();
    for v in mask_bits(cand) {
        match cliques.iter_mut().find(|c| **c & !nbr[v] == 0) {
            Some(c) => *c |= 1 << v,
            None => cliques.push(1 << v),
        }
    }
    cliques.len() as u32
}

fn mask_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}
