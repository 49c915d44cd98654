//! Complexity verdicts for a handful of targets.
//!
//! cargo run --example classify

use mincost_hom::recognition::{builtin_pattern, classify_target, PatternKind};
use mincost_hom::Graph;

fn main() {
    let targets = [
        ("P5", Graph::path(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("triangle", Graph::complete(3)),
        ("C8", Graph::cycle(8)),
        ("bipartite claw", builtin_pattern(PatternKind::BipartiteClaw)),
        ("bipartite net", builtin_pattern(PatternKind::BipartiteNet)),
        ("bipartite tent", builtin_pattern(PatternKind::BipartiteTent)),
    ];
    for (name, h) in targets {
        let v = classify_target(&h);
        println!("{name:>15}: {}({})", v.kind, v.reason);
        println!("{:>15}  {}", "", v.reason.explanation());
    }
}
