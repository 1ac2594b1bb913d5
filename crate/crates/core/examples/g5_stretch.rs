//! Exact solve of `G_5` (expected crossing number 5).

use std::time::Instant;

use crosscert::graph::family_gn;
use crosscert::solver::{decide_cr_le_k, Budget};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let g = family_gn(n).unwrap();
    for k in [n as i64 - 1, n as i64] {
        let t = Instant::now();
        let r = decide_cr_le_k(&g, k, Budget::seconds(1800)).unwrap();
        println!(
            "G{n} k={k}: {:?} nodes={} dup={} {:.2?}",
            r.decision.plan().map(|p| p.len()),
            r.nodes,
            r.duplicates_pruned,
            t.elapsed()
        );
    }
}
