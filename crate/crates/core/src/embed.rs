//! Induced subgraph search by backtracking.

use crate::graph::Graph;

/// Finds an injective map `pattern -> host` that preserves both edges and
/// non-edges. Pattern vertices are placed in index order and candidates are
/// tried in ascending order, so the returned image tuple is the
/// lexicographically least one.
pub fn find_induced_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_embedding(host, pattern, |image| {
        found = Some(image.to_vec());
        false
    });
    found
}

/// Calls `visit` on every induced embedding in lexicographic order until it
/// returns `false`.
pub fn for_each_induced_embedding(
    host: &Graph,
    pattern: &Graph,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    let p = pattern.n();
    if p > host.n() {
        return;
    }
    if host.m() < pattern.m() {
        return;
    }
    let mut image = Vec::with_capacity(p);
    let mut used = vec![false; host.n()];
    extend(host, pattern, &mut image, &mut used, &mut visit);
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    image: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let next = image.len();
    if next == pattern.n() {
        return visit(image);
    }
    let need = pattern.degree(next);
    for cand in 0..host.n() {
        if used[cand] || host.degree(cand) < need {
            continue;
        }
        let consistent = (0..next)
            .all(|prev| pattern.has_edge(prev, next) == host.has_edge(image[prev], cand));
        if !consistent {
            continue;
        }
        used[cand] = true;
        image.push(cand);
        let keep_going = extend(host, pattern, image, used, visit);
        image.pop();
        used[cand] = false;
        if !keep_going {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_in_c6_is_identity() {
        let c6 = Graph::cycle(6);
        assert_eq!(find_induced_embedding(&c6, &c6), Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn c8_has_no_induced_c6() {
        assert_eq!(find_induced_embedding(&Graph::cycle(8), &Graph::cycle(6)), None);
    }

    #[test]
    fn p5_inside_claw() {
        // hub 0, leaves 1..3, middles 4..6
        let claw = Graph::new(7, &[(0, 4), (0, 5), (0, 6), (4, 1), (5, 2), (6, 3)]).unwrap();
        let img = find_induced_embedding(&claw, &Graph::path(5)).unwrap();
        for i in 0..5 {
            for j in (i + 1)..5 {
                assert_eq!(claw.has_edge(img[i], img[j]), j == i + 1);
            }
        }
    }

    #[test]
    fn larger_pattern_is_absent() {
        assert_eq!(find_induced_embedding(&Graph::path(3), &Graph::path(4)), None);
    }
}
