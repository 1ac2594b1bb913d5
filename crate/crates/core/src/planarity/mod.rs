//! Planarity decision and Kuratowski witnesses.
//!
//! Decision only: no embedding is produced. Witnesses are found by greedy
//! edge deletion in a fixed order, so they are reproducible.

mod kuratowski;
mod lr;

pub use kuratowski::{
    kuratowski_witness, minimal_nonplanar_subgraph, witness_profile, WitnessShape,
};
pub use lr::is_planar_simple;

use crate::graph::{EdgeId, Graph};

/// Outcome of a planarity query on a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// Present iff non-planar: an edge-minimal non-planar subgraph (edge ids).
    pub witness: Option<Vec<EdgeId>>,
}

/// Planarity of a graph given as an edge list over `0..n`; loops and
/// parallel edges are allowed.
///
/// Loops are dropped and every repeated edge is subdivided before the test,
/// which leaves planarity unchanged.
pub fn is_planar_multigraph(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    let mut simple = Vec::with_capacity(edges.len());
    let mut extra = 0;
    for &(u, v) in edges {
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            simple.push(key);
        } else {
            let w = n + extra;
            extra += 1;
            simple.push((u, w));
            simple.push((w, v));
        }
    }
    is_planar_simple(n + extra, &simple)
}

pub fn is_planar(g: &Graph) -> bool {
    is_planar_simple(g.vertex_count(), g.edges())
}

/// Planarity verdict with a Kuratowski witness for non-planar graphs.
pub fn planarity_verdict(g: &Graph) -> PlanarityVerdict {
    match kuratowski_witness(g.vertex_count(), g.edges()) {
        None => PlanarityVerdict {
            planar: true,
            witness: None,
        },
        Some(w) => PlanarityVerdict {
            planar: false,
            witness: Some(w),
        },
    }
}
