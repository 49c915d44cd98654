//! Independent set in a 3-partite graph as a cost question on the bipartite claw.
//!
//! cargo run --example claw

use mincost_hom::recognition::{builtin_pattern, embed_pattern, PatternKind};
use mincost_hom::reductions::{claw_witness_hom, reduce_claw, ClawBudget};
use mincost_hom::solvers::{brute_force_optimum, max_independent_set_3partite, Limits, MisInstance};
use mincost_hom::{validate_hom, Graph};

fn main() -> mincost_hom::Result<()> {
    // x1 x2 | y1 y2 | z1
    let g = Graph::new(5, &[(0, 4), (1, 4), (1, 2), (1, 3), (3, 4)])?;
    let h = builtin_pattern(PatternKind::BipartiteClaw);
    let emb = embed_pattern(&h, PatternKind::BipartiteClaw).unwrap();

    let (set, size) = max_independent_set_3partite(&MisInstance::new(g.clone(), [vec![0, 1], vec![2, 3], vec![4]], 1)?)?;
    println!("maximum independent set {set:?} of size {size}");

    for k in 1..=g.n() {
        let mis = MisInstance::new(g.clone(), [vec![0, 1], vec![2, 3], vec![4]], k)?;
        let out = reduce_claw(&mis, &h, &emb)?;
        let t = out.instance.budget.unwrap();
        let opt = brute_force_optimum(&out.instance, &Limits::default())?.unwrap();
        let parts = ClawBudget::new(&mis);
        print!("k = {k}: T = {t} (T1..TI = {:?}), optimum {opt}, yes = {}", [parts.t1, parts.t2, parts.t3, parts.t4, parts.te, parts.ti], opt <= t);
        if k <= size {
            let witness = validate_hom(&out.instance, &claw_witness_hom(&out, &mis, &set[..k]))?;
            print!(", f_I costs {}", witness.cost);
        }
        println!();
    }
    Ok(())
}
