//! Seeded random instance families.
//!
//! All generators take an explicit RNG; [`generate`] seeds a ChaCha stream
//! from a `u64`, so equal seeds give equal documents on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::format::{GraphDoc, InstanceDocument};
use crate::graph::Graph;
use crate::instance::WeightedInstance;
use crate::solvers::MisInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    RandomBipartite,
    /// Proper interval bigraphs read off inclusion-free interval families.
    Pib,
    Tree,
    ThreePartite,
    Cycle,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "random-bipartite" => Family::RandomBipartite,
            "pib" => Family::Pib,
            "tree" => Family::Tree,
            "3partite" => Family::ThreePartite,
            "cycle" => Family::Cycle,
            _ => return Err(Error::Precondition(format!("unknown family `{s}`"))),
        })
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bipartite graph on sides `0..a` and `a..n` (`a` uniform in `1..n`), each
/// cross pair an edge with probability `p`.
pub fn random_bipartite(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let a = rng.random_range(1..n);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("cross pairs are valid edges")
}

/// An inclusion-free family of `len` intervals with integer endpoints:
/// left and right ends both strictly increasing.
pub fn proper_intervals(len: usize, span: u32, rng: &mut impl Rng) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(len);
    for _ in 0..len {
        let l = match out.last() {
            Some(&(l, _)) => l + rng.random_range(1..=span),
            None => rng.random_range(0..=span),
        };
        let mut r = l + rng.random_range(0..=span + 1);
        if let Some(&(_, prev)) = out.last() {
            r = r.max(prev + 1);
        }
        out.push((l, r));
    }
    out
}

/// Bigraph of two inclusion-free interval families: vertex `i < a` of the
/// first family is adjacent to vertex `a + j` when their intervals meet.
pub fn intersection_bigraph(first: &[(u32, u32)], second: &[(u32, u32)]) -> Graph {
    let a = first.len();
    let mut edges = Vec::new();
    for (i, &(l1, r1)) in first.iter().enumerate() {
        for (j, &(l2, r2)) in second.iter().enumerate() {
            if l1 <= r2 && l2 <= r1 {
                edges.push((i, a + j));
            }
        }
    }
    Graph::new(a + second.len(), &edges).expect("cross pairs are valid edges")
}

/// Random proper interval bigraph on `n` vertices, by construction.
pub fn random_pib(n: usize, rng: &mut impl Rng) -> Graph {
    let a = if n < 2 { n } else { rng.random_range(1..n) };
    let span = 2;
    let first = proper_intervals(a, span, rng);
    let second = proper_intervals(n - a, span, rng);
    intersection_bigraph(&first, &second)
}

/// Uniform random recursive tree: vertex `i` hangs off a vertex below it.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    Graph::new(n, &edges).expect("parent edges are valid")
}

/// Random 3-partite instance; vertex 0 is always in `V1`, which keeps it non-empty.
pub fn random_3partite(n: usize, p: f64, rng: &mut impl Rng) -> MisInstance {
    assert!(n >= 1);
    let part: Vec<usize> = (0..n).map(|v| if v == 0 { 0 } else { rng.random_range(0..3) }).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut parts: [Vec<usize>; 3] = Default::default();
    for (v, &i) in part.iter().enumerate() {
        parts[i].push(v);
    }
    let g = Graph::new(n, &edges).expect("cross-part edges are valid");
    MisInstance::new(g, parts, n.div_ceil(2)).expect("parts are independent by construction")
}

/// Random input graph and cost/weight tables for target `h`.
pub fn random_instance(
    h: &Graph,
    g_vertices: usize,
    max_cost: u64,
    max_weight: u64,
    rng: &mut impl Rng,
) -> WeightedInstance {
    let g = random_bipartite(g_vertices, 0.5, rng);
    let costs = (0..h.n()).map(|_| rng.random_range(0..=max_cost)).collect();
    let weights = (0..g.n()).map(|_| rng.random_range(1..=max_weight)).collect();
    WeightedInstance::new(g, h.clone(), costs, Some(weights), None).expect("shapes match")
}

/// Document for the CLI: a target of the family with a random input graph,
/// or a 3-partite seed for `3partite`.
pub fn generate(family: Family, n: usize, seed: u64) -> Result<InstanceDocument> {
    let mut rng = rng_from_seed(seed);
    let h = match family {
        Family::ThreePartite => {
            if n == 0 {
                return Err(Error::Precondition("3partite needs n >= 1".into()));
            }
            return Ok(InstanceDocument::from_mis(&random_3partite(n, 0.5, &mut rng)));
        }
        Family::RandomBipartite => random_bipartite(n, 0.5, &mut rng),
        Family::Pib => random_pib(n, &mut rng),
        Family::Tree => random_tree(n, &mut rng),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::Precondition("cycle needs n >= 3".into()));
            }
            Graph::cycle(n)
        }
    };
    let inst = random_instance(&h, n.clamp(2, 8), 10, 5, &mut rng);
    let mut doc = InstanceDocument::from_instance(&inst);
    doc.h = Some(GraphDoc::from_graph(&h));
    Ok(doc)
}
