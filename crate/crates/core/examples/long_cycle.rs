//! The same gadget idea for an induced C8 (budget 50kn^2 - 1 with k = 4).
//!
//! cargo run --example long_cycle

use mincost_hom::recognition::{embed_pattern, PatternKind};
use mincost_hom::reductions::{verify_reduction, ReductionKind, Seed};
use mincost_hom::solvers::Limits;
use mincost_hom::{Graph, Precolouring};

fn main() -> mincost_hom::Result<()> {
    let h = Graph::cycle(8);
    let emb = embed_pattern(&h, PatternKind::EvenCycle(8)).expect("C8 is induced in itself");
    let limits = Limits::default().with_brute_force_vertices(32);
    let cases: [(Graph, Vec<(usize, usize)>); 3] = [
        (Graph::path(2), vec![(0, 0), (1, 3)]),
        (Graph::path(3), vec![(0, 0), (2, 2)]),
        (Graph::cycle(4), vec![(0, 0), (2, 4)]),
    ];
    for (g, pairs) in cases {
        let pre = Precolouring::from_pairs(&pairs, &g, &h)?;
        let r = verify_reduction(ReductionKind::LongCycle, &Seed::Precolouring { g, pre }, &h, Some(&emb), &limits)?;
        println!(
            "pre {pairs:?}: extension {}, optimum {:?} vs T = {:?}, agree {} ({:.1?})",
            r.source_yes, r.target_optimum, r.budget, r.agree, r.elapsed
        );
    }
    Ok(())
}
