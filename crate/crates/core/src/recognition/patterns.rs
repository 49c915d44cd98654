//! The fixed obstruction patterns and their role names.
//!
//! Canonical numbering shared by the three 7-vertex patterns: vertices
//! `0..4` are the four vertices of the larger side, `4..7` the three of the
//! smaller side.

use std::fmt;

use crate::embed::find_induced_embedding;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Hexagon,
    /// Induced cycle of the given (even) length.
    EvenCycle(usize),
    BipartiteClaw,
    BipartiteNet,
    BipartiteTent,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Hexagon => write!(f, "hexagon"),
            PatternKind::EvenCycle(len) => write!(f, "C{len}"),
            PatternKind::BipartiteClaw => write!(f, "bipartite claw"),
            PatternKind::BipartiteNet => write!(f, "bipartite net"),
            PatternKind::BipartiteTent => write!(f, "bipartite tent"),
        }
    }
}

/// Bipartite claw: the 3-star with every edge subdivided.
/// Hub `v0 = 0`, leaves `v1..v3 = 1..3`, subdivision vertices `u1..u3 = 4..6`,
/// edges `u_i v_i` and `u_i v0`.
pub const CLAW_EDGES: [(usize, usize); 6] = [(4, 1), (5, 2), (6, 3), (4, 0), (5, 0), (6, 0)];

/// Bipartite net, transcribed from the drawing with black vertices
/// `a, b, c, d = 0..3` and white vertices `x, y, z = 4..6`.
pub const NET_EDGES: [(usize, usize); 8] = [
    (0, 4), // a-x
    (4, 2), // x-c
    (2, 6), // c-z
    (6, 1), // z-b
    (1, 5), // b-y
    (5, 0), // y-a
    (1, 4), // b-x
    (4, 3), // x-d
];

/// Bipartite tent, same naming as the net.
pub const TENT_EDGES: [(usize, usize); 7] = [
    (0, 5), // a-y
    (5, 2), // y-c
    (0, 4), // a-x
    (4, 3), // x-d
    (1, 4), // b-x
    (1, 5), // b-y
    (1, 6), // b-z
];

pub fn builtin_pattern(kind: PatternKind) -> Graph {
    match kind {
        PatternKind::Hexagon => Graph::cycle(6),
        PatternKind::EvenCycle(len) => {
            assert!(len >= 4 && len % 2 == 0, "even cycle length must be even and >= 4");
            Graph::cycle(len)
        }
        PatternKind::BipartiteClaw => Graph::new(7, &CLAW_EDGES).unwrap(),
        PatternKind::BipartiteNet => Graph::new(7, &NET_EDGES).unwrap(),
        PatternKind::BipartiteTent => Graph::new(7, &TENT_EDGES).unwrap(),
    }
}

/// Role name of every pattern vertex: `h1..h{len}` for cycles, `v0..v3, u1..u3`
/// for the claw and `a, b, c, d, x, y, z` for the net and tent.
pub fn role_names(kind: PatternKind) -> Vec<String> {
    match kind {
        PatternKind::Hexagon => cycle_roles(6),
        PatternKind::EvenCycle(len) => cycle_roles(len),
        PatternKind::BipartiteClaw => ["v0", "v1", "v2", "v3", "u1", "u2", "u3"]
            .map(String::from)
            .to_vec(),
        PatternKind::BipartiteNet | PatternKind::BipartiteTent => {
            ["a", "b", "c", "d", "x", "y", "z"].map(String::from).to_vec()
        }
    }
}

fn cycle_roles(len: usize) -> Vec<String> {
    (1..=len).map(|i| format!("h{i}")).collect()
}

/// An induced copy of a named pattern inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEmbedding {
    pub kind: PatternKind,
    /// `image[i]` is the host vertex playing pattern vertex `i`.
    pub image: Vec<usize>,
    pub roles: Vec<String>,
}

impl PatternEmbedding {
    /// Host vertex playing the given role, e.g. `"h3"` or `"u2"`.
    pub fn vertex(&self, role: &str) -> Option<usize> {
        self.roles.iter().position(|r| r == role).map(|i| self.image[i])
    }

    /// Pattern position of a host vertex, if it is on the embedding.
    pub fn position_of(&self, host_vertex: usize) -> Option<usize> {
        self.image.iter().position(|&x| x == host_vertex)
    }

    /// Re-checks injectivity and that edges and non-edges are preserved.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        let pattern = builtin_pattern(self.kind);
        if self.image.len() != pattern.n() || self.roles.len() != pattern.n() {
            return false;
        }
        if self.image.iter().any(|&x| x >= host.n()) {
            return false;
        }
        let mut seen = self.image.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.image.len() {
            return false;
        }
        (0..pattern.n()).all(|i| {
            (i + 1..pattern.n())
                .all(|j| pattern.has_edge(i, j) == host.has_edge(self.image[i], self.image[j]))
        })
    }
}

/// Lexicographically least induced copy of `kind` in `host`.
pub fn embed_pattern(host: &Graph, kind: PatternKind) -> Option<PatternEmbedding> {
    let pattern = builtin_pattern(kind);
    find_induced_embedding(host, &pattern).map(|image| PatternEmbedding {
        kind,
        image,
        roles: role_names(kind),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;

    #[test]
    fn claw_shape() {
        let claw = builtin_pattern(PatternKind::BipartiteClaw);
        assert_eq!((claw.n(), claw.m()), (7, 6));
        assert_eq!(claw.degree_sequence(), vec![3, 2, 2, 2, 1, 1, 1]);
        assert!(claw.is_tree());
        let b = bipartition(&claw).unwrap();
        let sizes = (b.part(0).len(), b.part(1).len());
        assert_eq!(sizes, (4, 3));
    }

    #[test]
    fn net_shape() {
        let net = builtin_pattern(PatternKind::BipartiteNet);
        assert_eq!((net.n(), net.m()), (7, 8));
        assert_eq!(net.degree_sequence(), vec![4, 3, 2, 2, 2, 2, 1]);
        let b = bipartition(&net).unwrap();
        assert_eq!(b.part(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn tent_shape() {
        let tent = builtin_pattern(PatternKind::BipartiteTent);
        assert_eq!((tent.n(), tent.m()), (7, 7));
        assert_eq!(tent.degree_sequence(), vec![3, 3, 3, 2, 1, 1, 1]);
        let b = bipartition(&tent).unwrap();
        assert_eq!(b.part(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn even_cycle_pattern() {
        assert_eq!(builtin_pattern(PatternKind::EvenCycle(8)), Graph::cycle(8));
        assert_eq!(role_names(PatternKind::EvenCycle(8))[7], "h8");
    }

    #[test]
    fn claw_embeds_in_itself_identically() {
        let claw = builtin_pattern(PatternKind::BipartiteClaw);
        let emb = embed_pattern(&claw, PatternKind::BipartiteClaw).unwrap();
        assert_eq!(emb.image, (0..7).collect::<Vec<_>>());
        assert_eq!(emb.vertex("u2"), Some(5));
        assert!(emb.is_valid_in(&claw));
    }
}
