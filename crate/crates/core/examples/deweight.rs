//! Replacing vertex weights by twin copies keeps the optimum.
//!
//! cargo run --example deweight

use mincost_hom::reductions::{eliminate_weights, DEFAULT_WEIGHT_CAP};
use mincost_hom::solvers::brute_force_min_cost;
use mincost_hom::{Graph, WeightedInstance};

fn main() -> mincost_hom::Result<()> {
    let inst = WeightedInstance::new(Graph::path(3), Graph::path(3), vec![4, 1, 3], Some(vec![2, 1, 3]), None)?;
    let (blown, origin) = eliminate_weights(&inst, DEFAULT_WEIGHT_CAP)?;
    println!("{} weighted vertices became {} unit vertices: origin {origin:?}", inst.g.n(), blown.g.n());
    let a = brute_force_min_cost(&inst)?.unwrap();
    let b = brute_force_min_cost(&blown)?.unwrap();
    println!("weighted optimum {} via {:?}", a.cost, a.map);
    println!("blown-up optimum {} via {:?}", b.cost, b.map);
    Ok(())
}
