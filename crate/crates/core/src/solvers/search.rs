//! Exhaustive homomorphism search over bitmask domains.
//!
//! Each input vertex keeps the set of target vertices it may still take.
//! At every node the domains are made arc consistent along the input edges
//! and, when a cost bound is active, values whose cost cannot fit under the
//! bound (given the per-vertex minima of everyone else) are removed. The sum
//! of per-vertex minima is the admissible lower bound.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const MAX_TARGET: usize = 64;

pub(crate) struct Engine<'a> {
    g: &'a Graph,
    nbr: Vec<u64>,
    unit: Vec<Vec<u64>>,
}

#[derive(Clone, Copy)]
struct Bound {
    limit: u64,
    inclusive: bool,
}

impl Bound {
    fn admits(self, total: u64) -> bool {
        if self.inclusive {
            total <= self.limit
        } else {
            total < self.limit
        }
    }
}

impl<'a> Engine<'a> {
    /// `unit[v][x]` is the cost of sending `v` to `x`.
    pub(crate) fn new(g: &'a Graph, h: &Graph, unit: Vec<Vec<u64>>) -> Result<Self> {
        if h.n() > MAX_TARGET {
            return Err(Error::SizeGuard {
                what: "target vertices",
                limit: MAX_TARGET,
                found: h.n(),
            });
        }
        let nbr = (0..h.n())
            .map(|x| h.neighbors(x).iter().fold(0u64, |m, &y| m | 1 << y))
            .collect();
        // every partial sum below is bounded by this total
        unit.iter().try_fold(0u64, |acc, row| {
            let worst = row.iter().copied().max().unwrap_or(0);
            acc.checked_add(worst).ok_or(Error::Overflow("search cost bound"))
        })?;
        Ok(Engine { g, nbr, unit })
    }

    pub(crate) fn full_domains(&self) -> Vec<u64> {
        let all = if self.nbr.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.nbr.len()) - 1
        };
        vec![all; self.g.n()]
    }

    fn min_cost(&self, v: usize, dom: u64) -> u64 {
        bits(dom).map(|x| self.unit[v][x]).min().unwrap_or(u64::MAX)
    }

    fn support(&self, dom: u64) -> u64 {
        bits(dom).fold(0, |acc, x| acc | self.nbr[x])
    }

    // Returns the lower bound, or None when some domain empties.
    fn propagate(&self, dom: &mut [u64], bound: Option<Bound>) -> Option<u64> {
        if dom.contains(&0) {
            return None;
        }
        loop {
            let mut changed = false;
            for &(u, v) in self.g.edges() {
                for (a, b) in [(u, v), (v, u)] {
                    let narrowed = dom[a] & self.support(dom[b]);
                    if narrowed != dom[a] {
                        if narrowed == 0 {
                            return None;
                        }
                        dom[a] = narrowed;
                        changed = true;
                    }
                }
            }
            let mins: Vec<u64> = (0..dom.len()).map(|v| self.min_cost(v, dom[v])).collect();
            let lb: u64 = mins.iter().sum();
            if let Some(b) = bound {
                if !b.admits(lb) {
                    return None;
                }
                for v in 0..dom.len() {
                    let rest = lb - mins[v];
                    let keep = bits(dom[v])
                        .filter(|&x| b.admits(rest + self.unit[v][x]))
                        .fold(0u64, |m, x| m | 1 << x);
                    if keep != dom[v] {
                        if keep == 0 {
                            return None;
                        }
                        dom[v] = keep;
                        changed = true;
                    }
                }
            }
            if !changed {
                return Some(lb);
            }
        }
    }

    /// Minimum total cost over all homomorphisms inside `dom`.
    pub(crate) fn optimum(&self, dom: Vec<u64>) -> Option<u64> {
        let mut best = None;
        self.branch_and_bound(dom, &mut best);
        best
    }

    fn branch_and_bound(&self, mut dom: Vec<u64>, best: &mut Option<u64>) {
        let bound = best.map(|limit| Bound {
            limit,
            inclusive: false,
        });
        let Some(lb) = self.propagate(&mut dom, bound) else {
            return;
        };
        let Some(v) = self.pick_vertex(&dom) else {
            *best = Some(lb);
            return;
        };
        let mut values: Vec<usize> = bits(dom[v]).collect();
        values.sort_by_key(|&x| (self.unit[v][x], x));
        for x in values {
            let mut child = dom.clone();
            child[v] = 1 << x;
            self.branch_and_bound(child, best);
        }
    }

    // Smallest domain first, then the widest cost spread, then lowest index.
    fn pick_vertex(&self, dom: &[u64]) -> Option<usize> {
        (0..dom.len())
            .filter(|&v| dom[v].count_ones() > 1)
            .min_by_key(|&v| {
                let costs: Vec<u64> = bits(dom[v]).map(|x| self.unit[v][x]).collect();
                let spread = costs.iter().max().unwrap() - costs.iter().min().unwrap();
                (dom[v].count_ones(), std::cmp::Reverse(spread), v)
            })
    }

    /// Lexicographically least homomorphism inside `dom` whose cost is at
    /// most `limit` (any cost when `None`).
    pub(crate) fn first_within(&self, dom: Vec<u64>, limit: Option<u64>) -> Option<Vec<usize>> {
        let bound = limit.map(|limit| Bound {
            limit,
            inclusive: true,
        });
        self.lex_search(dom, bound)
    }

    fn lex_search(&self, mut dom: Vec<u64>, bound: Option<Bound>) -> Option<Vec<usize>> {
        self.propagate(&mut dom, bound)?;
        let Some(v) = (0..dom.len()).find(|&v| dom[v].count_ones() > 1) else {
            return Some(dom.iter().map(|d| d.trailing_zeros() as usize).collect());
        };
        for x in bits(dom[v]) {
            let mut child = dom.clone();
            child[v] = 1 << x;
            if let Some(map) = self.lex_search(child, bound) {
                return Some(map);
            }
        }
        None
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
