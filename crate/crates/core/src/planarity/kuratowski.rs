use super::lr::is_planar_simple;
use crate::graph::EdgeId;

/// Edge ids of an edge-minimal non-planar subgraph, or `None` if planar.
///
/// Components are examined in order of their smallest vertex and the witness
/// comes from the first non-planar one. Inside it, edges are tried for
/// deletion in the order given; an edge is dropped whenever the rest stays
/// non-planar. One pass suffices, because deleting edges never turns a
/// planar graph non-planar.
pub fn kuratowski_witness(n: usize, edges: &[(usize, usize)]) -> Option<Vec<EdgeId>> {
    if is_planar_simple(n, edges) {
        return None;
    }
    let comp = components(n, edges);
    let mut by_comp: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for (id, &(u, _)) in edges.iter().enumerate() {
        by_comp[comp[u]].push(id);
    }
    // component ids are assigned in order of smallest vertex
    for ids in by_comp.into_iter().filter(|ids| !ids.is_empty()) {
        let sub: Vec<(usize, usize)> = ids.iter().map(|&e| edges[e]).collect();
        if is_planar_simple(n, &sub) {
            continue;
        }
        let keep = minimal_nonplanar_subgraph(n, &sub);
        return Some(keep.into_iter().map(|k| ids[k]).collect());
    }
    unreachable!("a non-planar graph has a non-planar component")
}

/// Greedy minimalization of a non-planar edge list; returns indices into `edges`.
pub fn minimal_nonplanar_subgraph(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut alive = vec![true; edges.len()];
    let mut scratch = Vec::with_capacity(edges.len());
    for i in 0..edges.len() {
        alive[i] = false;
        scratch.clear();
        scratch.extend(
            edges
                .iter()
                .zip(&alive)
                .filter(|(_, &a)| a)
                .map(|(&e, _)| e),
        );
        if is_planar_simple(n, &scratch) {
            alive[i] = true;
        }
    }
    (0..edges.len()).filter(|&i| alive[i]).collect()
}

fn components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Shape of a Kuratowski subdivision read off its degree profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessShape {
    /// Five branch vertices of degree 4.
    K5,
    /// Six branch vertices of degree 3.
    K33,
}

/// Classifies an edge list by degrees: every touched vertex must have degree
/// 2 except five of degree 4 (K₅) or six of degree 3 (K₃,₃).
pub fn witness_profile(n: usize, edges: &[(usize, usize)]) -> Option<WitnessShape> {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut count = [0usize; 5];
    for &d in &deg {
        match d {
            0 | 2 => {}
            3 => count[3] += 1,
            4 => count[4] += 1,
            _ => return None,
        }
    }
    match (count[3], count[4]) {
        (0, 5) => Some(WitnessShape::K5),
        (6, 0) => Some(WitnessShape::K33),
        _ => None,
    }
}
