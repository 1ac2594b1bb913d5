//! Times the exact solver on the small benchmark graphs.

use std::time::Instant;

use crosscert::graph::*;
use crosscert::solver::{compute_cr, Budget};

fn main() {
    let graphs = [
        ("K3,3", make_complete_bipartite(3, 3).unwrap()),
        ("K5", make_complete(5).unwrap()),
        ("K6", make_complete(6).unwrap()),
        ("K3,4", make_complete_bipartite(3, 4).unwrap()),
        ("G4", family_gn(4).unwrap()),
        ("Petersen", make_petersen()),
    ];
    for (name, g) in graphs {
        let t = Instant::now();
        let out = compute_cr(&g, Budget::unlimited(), None);
        let r = out.exact().expect("no budget");
        println!(
            "{name:10} cr = {}  nodes = {:8}  {:.2?}",
            r.cr,
            r.nodes_explored,
            t.elapsed()
        );
    }
}
