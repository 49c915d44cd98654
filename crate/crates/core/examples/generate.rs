//! Seeded instance families and a round trip through the text format.
//!
//! cargo run --example generate

use mincost_hom::format::InstanceDocument;
use mincost_hom::generate::{generate, Family};
use mincost_hom::recognition::classify_target;

fn main() -> mincost_hom::Result<()> {
    for family in [Family::Pib, Family::Tree, Family::RandomBipartite, Family::Cycle] {
        let doc = generate(family, 8, 7)?;
        let h = doc.graph_h()?;
        let v = classify_target(&h);
        println!("{family:?}: {} target edges, {}({})", h.m(), v.kind, v.reason);
    }
    let doc = generate(Family::ThreePartite, 5, 3)?;
    let text = doc.to_text()?;
    assert_eq!(InstanceDocument::parse(&text)?, doc);
    println!("\n{text}");
    Ok(())
}
