//! Optimal weighted homomorphism of a 6-cycle onto a path, with both solvers.
//!
//! cargo run --example solve

use mincost_hom::solvers::{brute_force_min_cost, min_cut_min_cost};
use mincost_hom::{Graph, WeightedInstance};

fn main() -> mincost_hom::Result<()> {
    let g = Graph::cycle(6);
    let h = Graph::path(4);
    let inst = WeightedInstance::new(g, h, vec![3, 0, 9, 4], Some(vec![1, 2, 1, 2, 1, 2]), Some(10))?;

    let brute = brute_force_min_cost(&inst)?.expect("even cycles map to paths");
    let cut = min_cut_min_cost(&inst)?.expect("same instance");
    println!("brute force: cost {} map {:?}", brute.cost, brute.map);
    println!("min cut:     cost {} map {:?}", cut.cost, cut.map);
    println!("within budget 10: {}", brute.cost <= 10);
    Ok(())
}
