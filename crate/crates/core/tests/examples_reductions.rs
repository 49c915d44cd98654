use mincost_hom::recognition::{builtin_pattern, embed_pattern, PatternKind};
use mincost_hom::reductions::*;
use mincost_hom::solvers::{decide, decide_with, Limits, MisInstance};
use mincost_hom::{Graph, Precolouring};

fn cycle_host(len: usize) -> (Graph, mincost_hom::recognition::PatternEmbedding) {
    let h = Graph::cycle(len);
    let kind = if len == 6 { PatternKind::Hexagon } else { PatternKind::EvenCycle(len) };
    let emb = embed_pattern(&h, kind).unwrap();
    (h, emb)
}

#[test]
fn hexagon_examples() {
    let (h, emb) = cycle_host(6);
    let k2 = Graph::path(2);
    let both = Precolouring::from_pairs(&[(0, 0), (1, 0)], &k2, &h).unwrap();
    let out = reduce_hexagon(&k2, &both, &h, &emb).unwrap();
    assert_eq!(out.instance.g.n(), 2 + 12);
    assert!(!decide(&out.instance).unwrap());
    let one = Precolouring::from_pairs(&[(0, 0)], &k2, &h).unwrap();
    let out = reduce_hexagon(&k2, &one, &h, &emb).unwrap();
    assert!(decide(&out.instance).unwrap());
    for name in ["v0", "v1", "(v0,1)", "(v0,6)"] {
        assert!(out.names.resolve(name).is_some(), "{name}");
    }
}

#[test]
fn long_cycle_examples() {
    let (h, emb) = cycle_host(8);
    let k2 = Graph::path(2);
    let far = Precolouring::from_pairs(&[(0, 0), (1, 3)], &k2, &h).unwrap();
    let out = reduce_long_cycle(&k2, &far, &h, &emb).unwrap();
    assert_eq!(out.instance.budget, Some(799));
    assert!(!decide(&out.instance).unwrap());
    let p3 = Graph::path(3);
    let ends = Precolouring::from_pairs(&[(0, 0), (2, 2)], &p3, &h).unwrap();
    let out = reduce_long_cycle(&p3, &ends, &h, &emb).unwrap();
    assert!(decide_with(&out.instance, &Limits::default().with_brute_force_vertices(32)).unwrap());
}

#[test]
fn claw_examples() {
    let h = builtin_pattern(PatternKind::BipartiteClaw);
    let emb = embed_pattern(&h, PatternKind::BipartiteClaw).unwrap();
    let g = Graph::new(5, &[(0, 4), (1, 4), (1, 2), (1, 3), (3, 4)]).unwrap();
    for (k, expected) in [(3, true), (4, false)] {
        let mis = MisInstance::new(g.clone(), [vec![0, 1], vec![2, 3], vec![4]], k).unwrap();
        let out = reduce_claw(&mis, &h, &emb).unwrap();
        assert_eq!(decide(&out.instance).unwrap(), expected, "k = {k}");
        let b = ClawBudget::new(&mis);
        assert_eq!(b.t4, 2 * 50 * 5 * 10 + 4 + 3);
        assert_eq!(b.ti, -12 * 10 * k as i128);
        assert_eq!(b.sum(), out.instance.budget.unwrap() as i128);
        for name in ["d_0_4", "d_3_4", "b_1", "b_2", "b_3", "c_0", "c_1", "c_2"] {
            assert!(out.names.resolve(name).is_some(), "{name}");
        }
    }
}

#[test]
fn weight_elimination_examples() {
    let inst = mincost_hom::WeightedInstance::new(Graph::path(2), Graph::path(3), vec![2, 0, 7], Some(vec![2, 3]), None)
        .unwrap();
    let (blown, origin) = eliminate_weights(&inst, DEFAULT_WEIGHT_CAP).unwrap();
    assert_eq!(blown.g, Graph::complete_bipartite(2, 3));
    assert_eq!(origin.len(), 5);
    let report = verify_reduction(ReductionKind::Deweight, &Seed::Weighted(inst), &Graph::empty(0), None, &Limits::default())
        .unwrap();
    assert!(report.agree);
    assert_eq!(report.source_optimum, report.target_optimum);
}

#[test]
fn verify_rejects_mismatched_seed() {
    let (h, emb) = cycle_host(6);
    let mis = MisInstance::new(Graph::path(2), [vec![0], vec![1], vec![]], 1).unwrap();
    assert!(verify_reduction(ReductionKind::Hexagon, &Seed::Mis(mis), &h, Some(&emb), &Limits::default()).is_err());
}
