//! Induced cycle search.

use crate::graph::Graph;

/// Shortest induced cycle of length at least `min_len`, as a vertex list.
///
/// Among cycles of the shortest length the lexicographically least canonical
/// form is returned: it starts at the cycle's smallest vertex and its second
/// vertex is smaller than its last.
pub fn find_long_induced_cycle(h: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let min_len = min_len.max(3);
    (min_len..=h.n()).find_map(|len| induced_cycle_of_length(h, len))
}

/// Lexicographically least canonical induced cycle of exactly `len` vertices.
pub fn induced_cycle_of_length(h: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > h.n() {
        return None;
    }
    let mut path = Vec::with_capacity(len);
    let mut on_path = vec![false; h.n()];
    for start in 0..h.n() {
        path.push(start);
        on_path[start] = true;
        if grow(h, len, &mut path, &mut on_path) {
            return Some(path);
        }
        path.pop();
        on_path[start] = false;
    }
    None
}

// Extends an induced path whose first vertex is the smallest on the cycle.
fn grow(h: &Graph, len: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    let k = path.len();
    for &next in h.neighbors(last) {
        if next <= start || on_path[next] {
            continue;
        }
        let closes = k + 1 == len;
        if k >= 2 {
            // next may touch only `last`, plus `start` when it closes the cycle
            if closes != h.has_edge(next, start) {
                continue;
            }
            if path[1..k - 1].iter().any(|&p| h.has_edge(next, p)) {
                continue;
            }
        }
        if closes && next < path[1] {
            // the reverse orientation is lexicographically smaller
            continue;
        }
        path.push(next);
        on_path[next] = true;
        if closes || grow(h, len, path, on_path) {
            return true;
        }
        path.pop();
        on_path[next] = false;
    }
    false
}

/// True iff `cycle` is an induced cycle of `h`.
pub fn is_induced_cycle(h: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != len || sorted.iter().any(|&v| v >= h.n()) {
        return false;
    }
    (0..len).all(|i| {
        (i + 1..len).all(|j| {
            let adjacent_on_cycle = j == i + 1 || (i == 0 && j == len - 1);
            h.has_edge(cycle[i], cycle[j]) == adjacent_on_cycle
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_is_its_own_long_cycle() {
        assert_eq!(
            find_long_induced_cycle(&Graph::cycle(6), 6),
            Some(vec![0, 1, 2, 3, 4, 5])
        );
    }

    #[test]
    fn trees_have_none() {
        assert_eq!(find_long_induced_cycle(&Graph::path(9), 6), None);
    }

    #[test]
    fn c8_with_chord_gives_the_six_cycle() {
        // chord 0-3 splits C8 into 0-1-2-3 (C4) and 0-3-4-5-6-7 (C6)
        let g = Graph::cycle(8).add_edges(&[(0, 3)]).unwrap();
        let cyc = find_long_induced_cycle(&g, 6).unwrap();
        assert_eq!(cyc, vec![0, 3, 4, 5, 6, 7]);
        assert!(is_induced_cycle(&g, &cyc));
    }

    #[test]
    fn four_cycles_are_not_long() {
        assert_eq!(find_long_induced_cycle(&Graph::complete_bipartite(3, 3), 6), None);
        assert_eq!(
            find_long_induced_cycle(&Graph::complete_bipartite(3, 3), 4),
            Some(vec![0, 3, 1, 4])
        );
    }
}
