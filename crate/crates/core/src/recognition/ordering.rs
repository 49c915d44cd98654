//! Min-max orderings of bipartite graphs.
//!
//! Orderings `<` of the two sides form a min-max ordering when for all
//! `u < u'` and `v < v'`, edges `uv'` and `u'v` force edges `uv` and `u'v'`.
//! Equivalently, under the orderings the edge relation is closed under
//! coordinate-wise minimum and maximum.

use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph};

/// Default cap on the side size for exhaustive ordering search.
pub const DEFAULT_ORDERING_CAP: usize = 8;

/// `order_x` orders side 0 of the BFS bipartition, `order_y` side 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinMaxOrdering {
    pub order_x: Vec<usize>,
    pub order_y: Vec<usize>,
}

impl MinMaxOrdering {
    /// Position of every vertex within its own side's order.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in self.order_x.iter().enumerate() {
            pos[x] = i;
        }
        for (i, &y) in self.order_y.iter().enumerate() {
            pos[y] = i;
        }
        pos
    }

    /// Checks that the orders partition `h` into two independent sides and
    /// satisfy the min-max property.
    pub fn validate(&self, h: &Graph) -> Result<()> {
        let n = h.n();
        let mut side = vec![u8::MAX; n];
        for (s, order) in [(0u8, &self.order_x), (1u8, &self.order_y)] {
            for &v in order.iter() {
                if v >= n {
                    return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
                }
                if side[v] != u8::MAX {
                    return Err(Error::InvalidOrdering(format!("vertex {v} listed twice")));
                }
                side[v] = s;
            }
        }
        if let Some(v) = side.iter().position(|&s| s == u8::MAX) {
            return Err(Error::InvalidOrdering(format!("vertex {v} missing")));
        }
        if let Some(&(u, v)) = h.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
            return Err(Error::InvalidOrdering(format!(
                "edge ({u}, {v}) lies inside one side"
            )));
        }
        let pos = self.positions(n);
        let oriented: Vec<(usize, usize)> = h
            .edges()
            .iter()
            .map(|&(a, b)| if side[a] == 0 { (a, b) } else { (b, a) })
            .collect();
        for &(u, v_hi) in &oriented {
            for &(u_hi, v) in &oriented {
                let crossing = pos[u] < pos[u_hi] && pos[v] < pos[v_hi];
                if crossing && (!h.has_edge(u, v) || !h.has_edge(u_hi, v_hi)) {
                    return Err(Error::InvalidOrdering(format!(
                        "edges {u}-{v_hi} and {u_hi}-{v} cross without {u}-{v} and {u_hi}-{v_hi}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, h: &Graph) -> bool {
        self.validate(h).is_ok()
    }
}

/// Exhaustive search for a min-max ordering of a bipartite graph.
///
/// Every permutation of side 0 is tried; side 1 is then built by backtracking
/// with the crossing condition checked as each vertex is placed. The first
/// ordering found (in lexicographic order of permutations) is returned.
pub fn find_min_max_ordering(h: &Graph, cap: usize) -> Result<Option<MinMaxOrdering>> {
    let parts = bipartition(h).ok_or(Error::NotBipartite)?;
    let xs = parts.part(0);
    let ys = parts.part(1);
    let largest = xs.len().max(ys.len());
    if largest > cap {
        return Err(Error::SearchCap { cap, found: largest });
    }
    let mut order_x = xs.clone();
    loop {
        let mut order_y = Vec::with_capacity(ys.len());
        let mut used = vec![false; ys.len()];
        if place_y(h, &order_x, &ys, &mut order_y, &mut used) {
            let ord = MinMaxOrdering { order_x, order_y };
            debug_assert!(ord.is_valid_for(h));
            return Ok(Some(ord));
        }
        if !next_permutation(&mut order_x) {
            return Ok(None);
        }
    }
}

fn place_y(
    h: &Graph,
    order_x: &[usize],
    ys: &[usize],
    order_y: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    if order_y.len() == ys.len() {
        return true;
    }
    for i in 0..ys.len() {
        if used[i] {
            continue;
        }
        let y = ys[i];
        // y becomes v' relative to every already placed y
        let ok = order_y.iter().all(|&v| {
            for a in 0..order_x.len() {
                for b in a + 1..order_x.len() {
                    let (u, u_hi) = (order_x[a], order_x[b]);
                    if h.has_edge(u, y)
                        && h.has_edge(u_hi, v)
                        && (!h.has_edge(u, v) || !h.has_edge(u_hi, y))
                    {
                        return false;
                    }
                }
            }
            true
        });
        if !ok {
            continue;
        }
        used[i] = true;
        order_y.push(y);
        if place_y(h, order_x, ys, order_y, used) {
            return true;
        }
        order_y.pop();
        used[i] = false;
    }
    false
}

/// Advances to the next lexicographic permutation; false after the last one.
pub(crate) fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::patterns::{builtin_pattern, PatternKind};

    #[test]
    fn k2_has_trivial_ordering() {
        let ord = find_min_max_ordering(&Graph::path(2), 8).unwrap().unwrap();
        assert_eq!(ord.order_x, vec![0]);
        assert_eq!(ord.order_y, vec![1]);
    }

    #[test]
    fn p4_has_an_ordering() {
        let p4 = Graph::path(4);
        let ord = find_min_max_ordering(&p4, 8).unwrap().unwrap();
        assert!(ord.is_valid_for(&p4));
    }

    #[test]
    fn claw_has_none() {
        let claw = builtin_pattern(PatternKind::BipartiteClaw);
        assert_eq!(find_min_max_ordering(&claw, 8).unwrap(), None);
    }

    #[test]
    fn cap_is_reported() {
        let star = Graph::complete_bipartite(1, 9);
        assert_eq!(
            find_min_max_ordering(&star, 8),
            Err(Error::SearchCap { cap: 8, found: 9 })
        );
        assert_eq!(
            find_min_max_ordering(&Graph::cycle(3), 8),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn validate_rejects_crossing() {
        // x0-y1, x1-y0 cross; x0-y0 missing
        let h = Graph::new(4, &[(0, 3), (1, 2)]).unwrap();
        let bad = MinMaxOrdering {
            order_x: vec![0, 1],
            order_y: vec![2, 3],
        };
        assert!(bad.validate(&h).is_err());
        let good = MinMaxOrdering {
            order_x: vec![0, 1],
            order_y: vec![3, 2],
        };
        assert!(good.validate(&h).is_ok());
    }

    #[test]
    fn permutations_enumerate_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
