//! Inspect the cut network behind the polynomial solver.
//!
//! cargo run --example flow_network

use mincost_hom::recognition::find_min_max_ordering;
use mincost_hom::solvers::{build_flow_network, max_flow, Alignment};
use mincost_hom::{Graph, WeightedInstance};

fn main() -> mincost_hom::Result<()> {
    let inst = WeightedInstance::new(Graph::path(3), Graph::path(4), vec![5, 2, 8, 1], None, None)?;
    let ord = find_min_max_ordering(&inst.h, 8)?.expect("paths are proper interval bigraphs");
    println!("ordering X = {:?}, Y = {:?}", ord.order_x, ord.order_y);
    for flip in [0u8, 1] {
        let align = Alignment { target_side: vec![Some(flip), Some(1 - flip), Some(flip)] };
        let Some(net) = build_flow_network(&inst, &ord, &align)? else {
            println!("orientation {flip}: no homomorphism");
            continue;
        };
        let f = max_flow(&net.network);
        println!(
            "orientation {flip}: {} nodes, {} arcs, infinity {}, min cut {} -> map {:?}",
            net.network.nodes(),
            net.network.arcs().len(),
            net.infinity,
            f.value,
            net.read_map(&f.source_side)
        );
    }
    Ok(())
}
