//! Pre-colouring extension to C6 turned into a weighted cost question on a
//! target containing an induced hexagon.
//!
//! cargo run --example hexagon

use mincost_hom::recognition::{embed_pattern, PatternKind};
use mincost_hom::reductions::{reduce_hexagon, verify_reduction, ReductionKind, Seed};
use mincost_hom::solvers::Limits;
use mincost_hom::{Graph, Precolouring};

fn main() -> mincost_hom::Result<()> {
    // C6 with a pendant vertex on h1
    let h = Graph::cycle(6).add_vertices(1).add_edges(&[(0, 6)])?;
    let emb = embed_pattern(&h, PatternKind::Hexagon).expect("C6 is induced");
    let g = Graph::path(3);

    for pairs in [[(0, 0), (2, 4)], [(0, 0), (2, 3)]] {
        let pre = Precolouring::from_pairs(&pairs, &g, &h)?;
        let out = reduce_hexagon(&g, &pre, &h, &emb)?;
        println!(
            "pre {pairs:?}: G' has {} vertices, {} edges, T = {}",
            out.instance.g.n(),
            out.instance.g.m(),
            out.instance.budget.unwrap()
        );
        let seed = Seed::Precolouring { g: g.clone(), pre };
        let r = verify_reduction(ReductionKind::Hexagon, &seed, &h, Some(&emb), &Limits::default())?;
        println!(
            "  extension exists: {}, optimum {:?}, agree: {}",
            r.source_yes, r.target_optimum, r.agree
        );
    }
    Ok(())
}
