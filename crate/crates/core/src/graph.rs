//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored canonically as
//! `(u, v)` with `u < v`, sorted, and each vertex keeps a sorted neighbour
//! list, so equal edge sets always produce equal graphs.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and duplicate
    /// edges (in either orientation).
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn cycle(len: usize) -> Self {
        assert!(len >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        Graph::new(len, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for x in 0..a {
            for y in a..a + b {
                edges.push((x, y));
            }
        }
        Graph::new(a + b, &edges).expect("complete bipartite edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, &edges).expect("union of valid graphs is valid")
    }

    /// Same graph with `count` extra isolated vertices appended.
    pub fn add_vertices(&self, count: usize) -> Graph {
        Graph::new(self.n + count, &self.edges).expect("existing edges stay valid")
    }

    pub fn add_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        Graph::new(self.n, &edges)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced edges are valid")
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }
}

/// A proper 2-colouring. `side(v)` is 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    /// Vertices on side `s`, ascending.
    pub fn part(&self, s: u8) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    /// True iff every edge of `g` joins the two sides.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// BFS 2-colouring. The smallest vertex of every component gets side 0, and
/// components are coloured in ascending order of their smallest vertex.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    bfs_colouring(g).ok()
}

/// An odd cycle of `g` as a vertex sequence, or `None` if `g` is bipartite.
pub fn odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    bfs_colouring(g).err()
}

fn bfs_colouring(g: &Graph) -> std::result::Result<Bipartition, Vec<usize>> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return Err(close_cycle(u, v, &parent, &depth));
                }
            }
        }
    }
    Ok(Bipartition { side })
}

// Joins the two BFS-tree paths from u and v to their common ancestor.
fn close_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Symbolic vertex names, one per vertex, e.g. `"(v3,2)"`, `"b_1"`, `"d_0_4"`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexNames {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexNames {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names(names: Vec<String>) -> Result<Self> {
        let mut table = VertexNames::new();
        for name in names {
            table.push(name)?;
        }
        Ok(table)
    }

    /// Appends a name for the next vertex index and returns that index.
    pub fn push(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        let idx = self.names.len();
        if self.index.insert(name.clone(), idx).is_some() {
            return Err(Error::Precondition(format!("duplicate vertex name {name:?}")));
        }
        self.names.push(name);
        Ok(idx)
    }

    pub fn resolve(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.get(v).map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// Incremental construction of a graph whose vertices carry names.
#[derive(Debug, Default)]
pub struct NamedGraphBuilder {
    names: VertexNames,
    edges: Vec<(usize, usize)>,
}

impl NamedGraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        self.names.push(name)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.names.len();
        if u >= n || v >= n {
            return Err(Error::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.edges.push((u, v));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn finish(self) -> Result<(Graph, VertexNames)> {
        let g = Graph::new(self.names.len(), &self.edges)?;
        Ok((g, self.names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_k2_and_hexagon() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6, Graph::cycle(6));
        assert!(c6.has_edge(5, 0) && c6.has_edge(0, 5));
        assert_eq!(c6.degree_sequence(), vec![2; 6]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 1), (1, 1)]), Err(Error::LoopEdge(1)));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::EndpointOutOfRange { .. })
        ));
        assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn bipartition_of_cycles() {
        let b = bipartition(&Graph::cycle(6)).unwrap();
        assert_eq!(b.sides(), &[0, 1, 0, 1, 0, 1]);
        let c5 = Graph::cycle(5);
        assert!(bipartition(&c5).is_none());
        let cyc = odd_cycle(&c5).unwrap();
        assert_eq!(cyc.len() % 2, 1);
        for i in 0..cyc.len() {
            assert!(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn odd_cycle_in_larger_graph() {
        // triangle 3-4-5 hanging off a path
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let cyc = odd_cycle(&g).unwrap();
        assert_eq!(cyc.len(), 3);
        for i in 0..3 {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % 3]));
        }
    }

    #[test]
    fn editing_helpers() {
        let k2 = Graph::path(2);
        let two = k2.disjoint_union(&k2);
        assert_eq!((two.n(), two.m()), (4, 2));
        assert!(two.has_edge(2, 3));
        let pendant = Graph::cycle(6).add_vertices(1).add_edges(&[(0, 6)]).unwrap();
        assert_eq!((pendant.n(), pendant.m()), (7, 7));
        assert_eq!(Graph::cycle(6).add_edges(&[(0, 0)]), Err(Error::LoopEdge(0)));
    }

    #[test]
    fn named_builder_resolves_names() {
        let mut b = NamedGraphBuilder::new();
        let v = b.add_vertex("v0").unwrap();
        let g1 = b.add_vertex("(v0,1)").unwrap();
        b.add_edge(v, g1).unwrap();
        assert!(b.add_vertex("v0").is_err());
        let (g, names) = b.finish().unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(names.resolve("(v0,1)"), Some(1));
        assert_eq!(names.name(0), Some("v0"));
    }

    #[test]
    fn components_and_trees() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::cycle(4).is_tree());
    }
}
