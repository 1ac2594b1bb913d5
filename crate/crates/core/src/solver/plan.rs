use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph};
use crate::planarity::is_planar_multigraph;

/// One realized crossing: piece `positions[0]` of `edges[0]` crosses piece
/// `positions[1]` of `edges[1]`, where pieces are counted along each edge
/// (from its first endpoint) at the moment the crossing was realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlanCrossing {
    pub edges: [EdgeId; 2],
    pub positions: [usize; 2],
}

/// A set of crossings defining a planarization of a graph.
///
/// Crossings are kept in realization order; replaying them reproduces the
/// order of dummy vertices along every edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingPlan {
    pub crossings: Vec<PlanCrossing>,
}

/// The graph obtained by replacing every crossing with a degree-4 dummy vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarization {
    /// Original vertices keep their ids; dummy `j` has id `original + j`.
    pub vertex_count: usize,
    pub original_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// `(original edge, piece index along it)` for every planarization edge.
    pub pieces: Vec<(EdgeId, usize)>,
}

impl Planarization {
    pub fn dummy_count(&self) -> usize {
        self.vertex_count - self.original_vertices
    }

    pub fn is_planar(&self) -> bool {
        is_planar_multigraph(self.vertex_count, &self.edges)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// Dummy vertices along every edge, in order from the edge's first endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct EdgeChains {
    pub chains: Vec<Vec<usize>>,
    /// dummy -> the two original edges through it
    pub dummies: Vec<[EdgeId; 2]>,
}

impl EdgeChains {
    pub fn new(edge_count: usize) -> EdgeChains {
        EdgeChains {
            chains: vec![Vec::new(); edge_count],
            dummies: Vec::new(),
        }
    }

    pub fn realize(&mut self, c: PlanCrossing) {
        let d = self.dummies.len();
        self.dummies.push(c.edges);
        for side in 0..2 {
            self.chains[c.edges[side]].insert(c.positions[side], d);
        }
    }

    pub fn planarization(&self, g: &Graph) -> Planarization {
        let n = g.vertex_count();
        let mut edges = Vec::with_capacity(g.edge_count() + 2 * self.dummies.len());
        let mut pieces = Vec::with_capacity(edges.capacity());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let mut prev = u;
            for (pos, &d) in self.chains[e].iter().enumerate() {
                edges.push((prev, n + d));
                pieces.push((e, pos));
                prev = n + d;
            }
            edges.push((prev, v));
            pieces.push((e, self.chains[e].len()));
        }
        Planarization {
            vertex_count: n + self.dummies.len(),
            original_vertices: n,
            edges,
            pieces,
        }
    }

    /// Order-independent encoding: for every edge, its crossing partners in order.
    pub fn canonical_key(&self) -> Vec<u16> {
        let mut key = Vec::with_capacity(self.chains.len() + 2 * self.dummies.len());
        for (e, chain) in self.chains.iter().enumerate() {
            for &d in chain {
                let [a, b] = self.dummies[d];
                key.push(if a == e { b as u16 } else { a as u16 });
            }
            key.push(u16::MAX);
        }
        key
    }

    pub fn crossed(&self, e: EdgeId, f: EdgeId) -> bool {
        self.dummies
            .iter()
            .any(|&[a, b]| (a == e && b == f) || (a == f && b == e))
    }
}

impl CrossingPlan {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub(crate) fn chains(&self, g: &Graph) -> EdgeChains {
        let mut chains = EdgeChains::new(g.edge_count());
        for &c in &self.crossings {
            chains.realize(c);
        }
        chains
    }

    pub fn planarization(&self, g: &Graph) -> Planarization {
        self.chains(g).planarization(g)
    }

    /// The crossing partners of every edge in order along it, as edge keys.
    pub fn edge_orders(&self, g: &Graph) -> Vec<(String, Vec<String>)> {
        let chains = self.chains(g);
        (0..g.edge_count())
            .filter(|&e| !chains.chains[e].is_empty())
            .map(|e| {
                let partners = chains.chains[e]
                    .iter()
                    .map(|&d| {
                        let [a, b] = chains.dummies[d];
                        g.edge_key(if a == e { b } else { a })
                    })
                    .collect();
                (g.edge_key(e), partners)
            })
            .collect()
    }

    /// Checks the structural invariants of the plan against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let mut chains = EdgeChains::new(g.edge_count());
        let mut pairs = BTreeSet::new();
        for (i, c) in self.crossings.iter().enumerate() {
            let [e, f] = c.edges;
            if e >= g.edge_count() || f >= g.edge_count() {
                return Err(format!("crossing {i} names an unknown edge"));
            }
            if e == f {
                return Err(format!("crossing {i} crosses an edge with itself"));
            }
            if g.edges_adjacent(e, f) {
                return Err(format!(
                    "crossing {i} involves adjacent edges {} and {}",
                    g.edge_key(e),
                    g.edge_key(f)
                ));
            }
            if !pairs.insert((e.min(f), e.max(f))) {
                return Err(format!(
                    "edges {} and {} cross more than once",
                    g.edge_key(e),
                    g.edge_key(f)
                ));
            }
            for side in 0..2 {
                if c.positions[side] > chains.chains[c.edges[side]].len() {
                    return Err(format!("crossing {i} names a piece that does not exist"));
                }
            }
            chains.realize(*c);
        }
        let p = chains.planarization(g);
        let deg = p.degrees();
        let orig = g.degrees();
        if deg[..g.vertex_count()] != orig[..] {
            return Err("original vertex degrees changed".into());
        }
        if deg[g.vertex_count()..].iter().any(|&d| d != 4) {
            return Err("a dummy vertex does not have degree 4".into());
        }
        Ok(())
    }
}
