//! Independent set in a 3-partite graph, reduced to the weighted
//! constrained-cost problem on a target containing an induced bipartite claw.
//!
//! `G'` subdivides every edge `e` of `G` with a vertex `d_e`, adds `b_i`
//! joined to all of part `V_i`, and a hub `c_0` joined to `b_1, b_2, b_3`
//! with pendants `c_1` on `b_1` and `c_2` on `b_2`.

use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::graph::NamedGraphBuilder;
use crate::instance::WeightedInstance;
use crate::recognition::{PatternEmbedding, PatternKind};
use crate::solvers::MisInstance;
use crate::Graph;

/// The budget as a sum of its per-group contributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClawBudget {
    pub t1: i128,
    pub t2: i128,
    pub t3: i128,
    pub t4: i128,
    pub te: i128,
    pub ti: i128,
}

impl ClawBudget {
    pub fn new(mis: &MisInstance) -> Self {
        let n = mis.g.n() as i128;
        let m = mis.g.m() as i128;
        let s = m + n;
        let sizes = mis.parts.each_ref().map(|p| p.len() as i128);
        ClawBudget {
            t1: 16 * s * sizes[0],
            t2: 12 * s * sizes[1],
            t3: 48 * s * sizes[2],
            t4: 2 * 50 * n * s + 4 + 3,
            te: 3 * m,
            ti: -12 * s * mis.k as i128,
        }
    }

    pub fn sum(&self) -> i128 {
        self.t1 + self.t2 + self.t3 + self.t4 + self.te + self.ti
    }

    /// `100n(m+n) + 7 + 3m + (4|V1| + 36|V3|)(m+n) + 12(m+n)(n-k)`.
    pub fn closed_form(mis: &MisInstance) -> i128 {
        let n = mis.g.n() as i128;
        let m = mis.g.m() as i128;
        let k = mis.k as i128;
        let s = m + n;
        let v1 = mis.parts[0].len() as i128;
        let v3 = mis.parts[2].len() as i128;
        100 * n * s + 7 + 3 * m + (4 * v1 + 36 * v3) * s + 12 * s * (n - k)
    }
}

const ROLES: [&str; 7] = ["v0", "v1", "v2", "v3", "u1", "u2", "u3"];

fn role(emb: &PatternEmbedding, name: &str) -> usize {
    emb.vertex(name).expect("claw embedding has all roles")
}

pub fn reduce_claw(mis: &MisInstance, h: &Graph, emb: &PatternEmbedding) -> Result<ReductionOutput> {
    if emb.kind != PatternKind::BipartiteClaw || ROLES.iter().any(|r| emb.vertex(r).is_none()) {
        return Err(Error::Precondition("embedding must be a bipartite claw".into()));
    }
    if !emb.is_valid_in(h) {
        return Err(Error::Precondition("claw embedding is not induced in H".into()));
    }
    // revalidate: the fields are public
    let mis = MisInstance::new(mis.g.clone(), mis.parts.clone(), mis.k)?;
    let g = &mis.g;
    let n = g.n();
    if mis.k == 0 || mis.k > n {
        return Err(Error::Precondition(format!("k = {} must lie in 1..={n}", mis.k)));
    }

    let parts = mis.parts.clone();
    let budget = ClawBudget::new(&mis);
    let closed = ClawBudget::closed_form(&mis);
    assert_eq!(budget.sum(), closed, "budget components disagree with closed form");

    let big = |x: i128| -> Result<u64> { u64::try_from(x).map_err(|_| Error::Overflow("claw parameters")) };
    let nn = n as i128;
    let s = (g.m() + n) as i128;
    let part_weight = [big(4 * s)?, big(3 * s)?, big(12 * s)?];

    let mut b = NamedGraphBuilder::new();
    let mut weights = Vec::new();
    for v in 0..n {
        b.add_vertex(format!("v{v}"))?;
        weights.push(part_weight[mis.part_of(v)]);
    }
    for &(u, v) in g.edges() {
        let d = b.add_vertex(format!("d_{u}_{v}"))?;
        weights.push(1);
        b.add_edge(u, d)?;
        b.add_edge(d, v)?;
    }
    let heavy_b1 = big(50 * nn * s)?;
    let heavy_b3 = big(160 * nn * s)?;
    let mut bs = [0; 3];
    for (i, (part, w)) in parts.iter().zip([heavy_b1, 1, heavy_b3]).enumerate() {
        bs[i] = b.add_vertex(format!("b_{}", i + 1))?;
        weights.push(w);
        for &v in part {
            b.add_edge(bs[i], v)?;
        }
    }
    for (i, w) in [1, heavy_b1, heavy_b3].into_iter().enumerate() {
        let c = b.add_vertex(format!("c_{i}"))?;
        weights.push(w);
        match i {
            0 => {
                for &bi in &bs {
                    b.add_edge(c, bi)?;
                }
            }
            _ => b.add_edge(c, bs[i - 1])?,
        }
    }
    let (g2, names) = b.finish()?;

    let mut costs = vec![heavy_b3; h.n()];
    for (r, c) in [("v0", 4), ("v1", 1), ("u1", 1), ("u2", 3), ("v3", 3), ("v2", 0), ("u3", 0)] {
        costs[role(emb, r)] = c;
    }
    let instance = WeightedInstance::new(g2, h.clone(), costs, Some(weights), Some(big(closed)?))?;
    Ok(ReductionOutput {
        instance,
        names,
        embedding: emb.clone(),
    })
}

/// The homomorphism `f_I` for an independent set `I`: `I ∩ V_i` goes to
/// `v_i`, the rest of `V(G)` to `v0`; `d_e` goes to `u_j` when an end of `e`
/// lies in `I ∩ V_j`, otherwise to `u3`; `b_j -> u_j`, `c_0 -> v0`,
/// `c_1 -> v1`, `c_2 -> v2`.
pub fn claw_witness_hom(out: &ReductionOutput, mis: &MisInstance, independent: &[usize]) -> Vec<usize> {
    let emb = &out.embedding;
    let v = |i: usize| role(emb, ROLES[i]);
    let u = |j: usize| role(emb, ROLES[3 + j]);
    let n = mis.g.n();
    let mut in_set = vec![false; n];
    for &x in independent {
        in_set[x] = true;
    }
    let mut map = vec![usize::MAX; out.instance.g.n()];
    for x in 0..n {
        map[x] = if in_set[x] { v(mis.part_of(x) + 1) } else { v(0) };
    }
    for &(a, b) in mis.g.edges() {
        let d = out.names.resolve(&format!("d_{a}_{b}")).expect("subdivision vertex");
        let end = [a, b].into_iter().find(|&x| in_set[x]);
        map[d] = match end {
            Some(x) => u(mis.part_of(x) + 1),
            None => u(3),
        };
    }
    for j in 1..=3 {
        map[out.names.resolve(&format!("b_{j}")).unwrap()] = u(j);
    }
    for i in 0..3 {
        map[out.names.resolve(&format!("c_{i}")).unwrap()] = v(i);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::validate_hom;
    use crate::recognition::{builtin_pattern, embed_pattern};

    fn five_vertex_example(k: usize) -> MisInstance {
        let g = Graph::new(5, &[(0, 4), (1, 4), (1, 2), (1, 3), (3, 4)]).unwrap();
        MisInstance::new(g, [vec![0, 1], vec![2, 3], vec![4]], k).unwrap()
    }

    fn claw() -> (Graph, PatternEmbedding) {
        let h = builtin_pattern(PatternKind::BipartiteClaw);
        let emb = embed_pattern(&h, PatternKind::BipartiteClaw).unwrap();
        (h, emb)
    }

    #[test]
    fn counts_and_budget() {
        let (h, emb) = claw();
        let mis = five_vertex_example(3);
        let out = reduce_claw(&mis, &h, &emb).unwrap();
        let (n, m) = (5, 5);
        assert_eq!(out.instance.g.n(), n + m + 6);
        assert_eq!(out.instance.g.m(), 2 * m + n + 5);
        // 100*5*10 + 7 + 15 + (8 + 36)*10 + 120*2
        assert_eq!(out.instance.budget, Some(5000 + 7 + 15 + 440 + 240));
        let b3 = out.names.resolve("b_3").unwrap();
        assert_eq!(out.instance.weight.get(b3), 160 * 5 * 10);
        assert_eq!(out.instance.cost.get(role(&emb, "u3")), 0);
        assert_eq!(out.instance.cost.get(role(&emb, "v0")), 4);
    }

    #[test]
    fn components_sum_to_closed_form() {
        for k in 1..=5 {
            let mis = five_vertex_example(k);
            assert_eq!(ClawBudget::new(&mis).sum(), ClawBudget::closed_form(&mis));
        }
    }

    #[test]
    fn witness_for_known_set() {
        let (h, emb) = claw();
        let mis = five_vertex_example(3);
        let out = reduce_claw(&mis, &h, &emb).unwrap();
        let map = claw_witness_hom(&out, &mis, &[0, 2, 3]);
        let hom = validate_hom(&out.instance, &map).unwrap();
        assert!(hom.cost <= out.instance.budget.unwrap());
    }

    #[test]
    fn rejects_k_out_of_range() {
        let (h, emb) = claw();
        assert!(reduce_claw(&five_vertex_example(0), &h, &emb).is_err());
        assert!(reduce_claw(&five_vertex_example(6), &h, &emb).is_err());
    }
}
