//! Labeled simple graphs, product constructions and the named families
//! `G_n = C_n ∘ K̄₂`, `M_n = C_n ∘ K₂` and `H_n = G_n □ K₂`.
//!
//! Vertex labels carry structure. `G_n` and `M_n` use `x1..xn`, `y1..yn`;
//! product graphs use `(u,v)`. Index arithmetic on those labels lives here
//! and nowhere else.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Index of a vertex inside a [`Graph`].
pub type VertexId = usize;
/// Index of an edge inside a [`Graph`] (position in the sorted edge list).
pub type EdgeId = usize;

/// Family tag attached to generated graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gn { n: usize },
    Mn { n: usize },
    Hn { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Custom,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gn { .. } => "gn",
            Family::Mn { .. } => "mn",
            Family::Hn { .. } => "hn",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::Custom => "custom",
        }
    }

    fn params(&self) -> BTreeMap<String, u64> {
        let mut p = BTreeMap::new();
        match *self {
            Family::Gn { n }
            | Family::Mn { n }
            | Family::Hn { n }
            | Family::Cycle { n }
            | Family::Complete { n } => {
                p.insert("n".to_string(), n as u64);
            }
            Family::CompleteBipartite { m, n } => {
                p.insert("m".to_string(), m as u64);
                p.insert("n".to_string(), n as u64);
            }
            Family::Custom => {}
        }
        p
    }

    fn from_parts(name: &str, params: &BTreeMap<String, u64>) -> Result<Family, GraphError> {
        let get = |key: &str| {
            params
                .get(key)
                .map(|&v| v as usize)
                .ok_or_else(|| GraphError::Format(format!("family `{name}` needs param `{key}`")))
        };
        Ok(match name {
            "gn" => Family::Gn { n: get("n")? },
            "mn" => Family::Mn { n: get("n")? },
            "hn" => Family::Hn { n: get("n")? },
            "cycle" => Family::Cycle { n: get("n")? },
            "complete" => Family::Complete { n: get("n")? },
            "complete_bipartite" => Family::CompleteBipartite {
                m: get("m")?,
                n: get("n")?,
            },
            "custom" => Family::Custom,
            other => return Err(GraphError::Format(format!("unknown family `{other}`"))),
        })
    }
}

/// A finite, simple, undirected graph with unique string labels.
///
/// Edges are stored with endpoints ordered by label and the edge list is
/// sorted lexicographically by label pair, so edge ids are reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    family: Option<Family>,
}

impl Graph {
    /// Builds a graph from labels and label pairs, validating simplicity.
    pub fn new<S, I, P>(vertices: I, edges: P) -> Result<Graph, GraphError>
    where
        S: Into<String>,
        I: IntoIterator<Item = S>,
        P: IntoIterator<Item = (S, S)>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b): (String, String) = (a.into(), b.into());
            let u = *index
                .get(&a)
                .ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let v = *index
                .get(&b)
                .ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            if u == v {
                return Err(GraphError::Loop(a));
            }
            pairs.push((u, v));
        }
        Self::from_indices(labels, index, pairs)
    }

    fn from_indices(
        labels: Vec<String>,
        index: HashMap<String, VertexId>,
        pairs: Vec<(VertexId, VertexId)>,
    ) -> Result<Graph, GraphError> {
        let mut edges: Vec<(VertexId, VertexId)> = pairs
            .into_iter()
            .map(|(u, v)| {
                if labels[u] <= labels[v] {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        edges.sort_by(|a, b| (&labels[a.0], &labels[a.1]).cmp(&(&labels[b.0], &labels[b.1])));
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(
                    labels[w[0].0].clone(),
                    labels[w[0].1].clone(),
                ));
            }
        }
        Ok(Graph {
            labels,
            index,
            edges,
            family: None,
        })
    }

    fn from_labels_and_pairs(
        labels: Vec<String>,
        pairs: Vec<(VertexId, VertexId)>,
    ) -> Result<Graph, GraphError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        Self::from_indices(labels, index, pairs)
    }

    pub fn with_family(mut self, family: Family) -> Graph {
        self.family = Some(family);
        self
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Edge endpoints; the first endpoint has the smaller label.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_labels(&self, e: EdgeId) -> (&str, &str) {
        let (u, v) = self.edges[e];
        (&self.labels[u], &self.labels[v])
    }

    /// Canonical textual key of an edge, `u--v` with `u < v` by label.
    pub fn edge_key(&self, e: EdgeId) -> String {
        let (a, b) = self.edge_labels(e);
        format!("{a}--{b}")
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if self.labels[u] <= self.labels[v] {
            (u, v)
        } else {
            (v, u)
        };
        self.edges
            .binary_search_by(|probe| {
                (&self.labels[probe.0], &self.labels[probe.1])
                    .cmp(&(&self.labels[key.0], &self.labels[key.1]))
            })
            .ok()
    }

    pub fn find_edge_by_labels(&self, a: &str, b: &str) -> Option<EdgeId> {
        self.find_edge(self.vertex(a)?, self.vertex(b)?)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.find_edge(u, v).is_some()
    }

    /// Whether two distinct edges share an endpoint.
    pub fn edges_adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.labels.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The graph with one edge removed. The family tag is dropped.
    pub fn without_edge(&self, e: EdgeId) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            edges,
            family: None,
        }
    }

    /// The graph restricted to a subset of its edges (all vertices kept).
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Graph {
        let set: BTreeSet<EdgeId> = keep.iter().copied().collect();
        Graph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            edges: set.into_iter().map(|e| self.edges[e]).collect(),
            family: None,
        }
    }

    /// The graph with one extra vertex of degree one attached to `anchor`.
    pub fn with_pendant(&self, anchor: &str, label: &str) -> Result<Graph, GraphError> {
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let a = self
            .vertex(anchor)
            .ok_or_else(|| GraphError::UnknownVertex(anchor.to_string()))?;
        let mut pairs = self.edges.clone();
        pairs.push((a, labels.len() - 1));
        Graph::from_labels_and_pairs(labels, pairs)
    }

    /// Relabels vertices through `map` (old label -> new label).
    pub fn relabel(&self, map: impl Fn(&str) -> String) -> Result<Graph, GraphError> {
        let labels: Vec<String> = self.labels.iter().map(|l| map(l)).collect();
        let mut g = Graph::from_labels_and_pairs(labels, self.edges.clone())?;
        g.family = self.family;
        Ok(g)
    }

    /// The set of edges as sorted label pairs, for edge-for-edge comparison.
    pub fn edge_label_set(&self) -> BTreeSet<(String, String)> {
        (0..self.edges.len())
            .map(|e| {
                let (a, b) = self.edge_labels(e);
                (a.to_string(), b.to_string())
            })
            .collect()
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            family: self.family.map(|f| f.name().to_string()),
            params: self.family.map(|f| f.params()).unwrap_or_default(),
            vertices: self.labels.clone(),
            edges: (0..self.edges.len())
                .map(|e| {
                    let (a, b) = self.edge_labels(e);
                    [a.to_string(), b.to_string()]
                })
                .collect(),
        }
    }

    pub fn from_file(file: &GraphFile) -> Result<Graph, GraphError> {
        let g = Graph::new(
            file.vertices.iter().cloned(),
            file.edges.iter().map(|[a, b]| (a.clone(), b.clone())),
        )?;
        let family = match &file.family {
            Some(name) => Some(Family::from_parts(name, &file.params)?),
            None => None,
        };
        Ok(Graph { family, ..g })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))?;
        Graph::from_file(&file)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph({} vertices, {} edges",
            self.vertex_count(),
            self.edge_count()
        )?;
        if let Some(fam) = self.family {
            write!(f, ", {}", fam.name())?;
        }
        write!(f, ")")
    }
}

/// On-disk graph format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub family: Option<String>,
    #[serde(default)]
    pub params: BTreeMap<String, u64>,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

// ---------------------------------------------------------------------------
// Basic generators

/// The cycle `C_n` on vertices `1..=n`.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_labels_and_pairs(labels, pairs)?.with_family(Family::Cycle { n }))
}

/// The complete graph `K_n` on vertices `0..n`.
pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(Graph::from_labels_and_pairs(labels, pairs)?.with_family(Family::Complete { n }))
}

/// The edgeless graph on vertices `0..n`; `make_empty(2)` is `K̄₂` (also written `2P₁`).
pub fn make_empty(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "empty graph needs n >= 1".into(),
        ));
    }
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Graph::from_labels_and_pairs(labels, Vec::new())
}

/// `K_{m,n}` with sides `a1..am` and `b1..bn`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 1 || n < 1 {
        return Err(GraphError::InvalidParameter(format!(
            "complete bipartite graph needs positive sides, got ({m}, {n})"
        )));
    }
    let labels: Vec<String> = (1..=m)
        .map(|i| format!("a{i}"))
        .chain((1..=n).map(|j| format!("b{j}")))
        .collect();
    let pairs = (0..m)
        .flat_map(|i| (0..n).map(move |j| (i, m + j)))
        .collect();
    Ok(
        Graph::from_labels_and_pairs(labels, pairs)?
            .with_family(Family::CompleteBipartite { m, n }),
    )
}

/// The Petersen graph (outer `o0..o4`, inner `i0..i4`).
pub fn make_petersen() -> Graph {
    let labels: Vec<String> = (0..5)
        .map(|i| format!("o{i}"))
        .chain((0..5).map(|i| format!("i{i}")))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, 5 + i));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_labels_and_pairs(labels, pairs)
        .expect("petersen graph is simple")
        .with_family(Family::Custom)
}

fn product_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Lexicographic product `g ∘ h`: `(u,u')~(v,v')` iff `u~v` in `g`, or `u=v` and `u'~v'` in `h`.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let id = |u: VertexId, a: VertexId| u * nh + a;
    let labels: Vec<String> = (0..g.vertex_count())
        .flat_map(|u| (0..nh).map(move |a| (u, a)))
        .map(|(u, a)| product_label(g.label(u), h.label(a)))
        .collect();
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        for a in 0..nh {
            for b in 0..nh {
                pairs.push((id(u, a), id(v, b)));
            }
        }
    }
    for u in 0..g.vertex_count() {
        for &(a, b) in h.edges() {
            pairs.push((id(u, a), id(u, b)));
        }
    }
    Graph::from_labels_and_pairs(labels, pairs).expect("product of simple graphs is simple")
}

/// Cartesian product `g □ h`: equal in one coordinate, adjacent in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let id = |u: VertexId, a: VertexId| u * nh + a;
    let labels: Vec<String> = (0..g.vertex_count())
        .flat_map(|u| (0..nh).map(move |a| (u, a)))
        .map(|(u, a)| product_label(g.label(u), h.label(a)))
        .collect();
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        for a in 0..nh {
            pairs.push((id(u, a), id(v, a)));
        }
    }
    for u in 0..g.vertex_count() {
        for &(a, b) in h.edges() {
            pairs.push((id(u, a), id(u, b)));
        }
    }
    Graph::from_labels_and_pairs(labels, pairs).expect("product of simple graphs is simple")
}

// ---------------------------------------------------------------------------
// G_n labels

/// Which of the two copies of a cycle vertex a `G_n` vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }

    fn prefix(self) -> char {
        match self {
            Side::X => 'x',
            Side::Y => 'y',
        }
    }
}

/// A vertex `x_i` or `y_i` of `G_n`, with `1 <= index <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GnVertex {
    pub side: Side,
    pub index: usize,
}

impl GnVertex {
    pub fn label(&self) -> String {
        format!("{}{}", self.side.prefix(), self.index)
    }

    pub fn parse(label: &str) -> Option<GnVertex> {
        let mut chars = label.chars();
        let side = match chars.next()? {
            'x' => Side::X,
            'y' => Side::Y,
            _ => return None,
        };
        let rest = chars.as_str();
        if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(GnVertex {
            side,
            index: rest.parse().ok()?,
        })
    }
}

/// Wraps an index into `1..=n` (so `n + 1 -> 1` and `0 -> n`).
pub fn wrap_index(i: isize, n: usize) -> usize {
    (i - 1).rem_euclid(n as isize) as usize + 1
}

/// The four edge kinds of a section `L^i`, named by the sides of
/// `(v_i, v_{i+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectionEdge {
    /// `x_i x_{i+1}`
    XX,
    /// `x_i y_{i+1}`
    XY,
    /// `y_i x_{i+1}`
    YX,
    /// `y_i y_{i+1}`
    YY,
}

impl SectionEdge {
    pub const ALL: [SectionEdge; 4] = [
        SectionEdge::XX,
        SectionEdge::XY,
        SectionEdge::YX,
        SectionEdge::YY,
    ];

    pub fn sides(self) -> (Side, Side) {
        match self {
            SectionEdge::XX => (Side::X, Side::X),
            SectionEdge::XY => (Side::X, Side::Y),
            SectionEdge::YX => (Side::Y, Side::X),
            SectionEdge::YY => (Side::Y, Side::Y),
        }
    }

    /// Cycle edges (`XX`, `YY`) versus diagonals (`XY`, `YX`).
    pub fn is_cycle_edge(self) -> bool {
        matches!(self, SectionEdge::XX | SectionEdge::YY)
    }

    fn from_sides(a: Side, b: Side) -> SectionEdge {
        match (a, b) {
            (Side::X, Side::X) => SectionEdge::XX,
            (Side::X, Side::Y) => SectionEdge::XY,
            (Side::Y, Side::X) => SectionEdge::YX,
            (Side::Y, Side::Y) => SectionEdge::YY,
        }
    }
}

/// An edge of `G_n` addressed by its section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GnEdge {
    pub n: usize,
    pub section: usize,
    pub kind: SectionEdge,
}

impl GnEdge {
    pub fn new(n: usize, section: usize, kind: SectionEdge) -> Result<GnEdge, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "G_n needs n >= 3, got {n}"
            )));
        }
        if section < 1 || section > n {
            return Err(GraphError::InvalidParameter(format!(
                "section index {section} outside 1..={n}"
            )));
        }
        Ok(GnEdge { n, section, kind })
    }

    pub fn endpoints(&self) -> (GnVertex, GnVertex) {
        let (a, b) = self.kind.sides();
        (
            GnVertex {
                side: a,
                index: self.section,
            },
            GnVertex {
                side: b,
                index: wrap_index(self.section as isize + 1, self.n),
            },
        )
    }

    /// Resolves an unordered label pair such as `("x1", "y2")` to a `G_n` edge.
    pub fn from_labels(n: usize, a: &str, b: &str) -> Result<GnEdge, GraphError> {
        let not_edge = || GraphError::NotAnEdge(a.to_string(), b.to_string());
        let u = GnVertex::parse(a).ok_or_else(not_edge)?;
        let v = GnVertex::parse(b).ok_or_else(not_edge)?;
        if n < 3 || u.index > n || v.index > n || u.index == 0 || v.index == 0 {
            return Err(not_edge());
        }
        for (p, q) in [(u, v), (v, u)] {
            if wrap_index(p.index as isize + 1, n) == q.index {
                return GnEdge::new(n, p.index, SectionEdge::from_sides(p.side, q.side));
            }
        }
        Err(not_edge())
    }

    /// Parses `x1y2`, `x1-y2`, `x1,y2` or `x1--y2`.
    pub fn parse(n: usize, spec: &str) -> Result<GnEdge, GraphError> {
        let spec = spec.trim();
        let parts: Vec<&str> = spec
            .split(['-', ',', ' '])
            .filter(|s| !s.is_empty())
            .collect();
        match parts.as_slice() {
            [a, b] => GnEdge::from_labels(n, a, b),
            [joined] => {
                let split = joined[1..]
                    .find(['x', 'y'])
                    .map(|p| p + 1)
                    .ok_or_else(|| GraphError::Format(format!("cannot parse edge `{spec}`")))?;
                GnEdge::from_labels(n, &joined[..split], &joined[split..])
            }
            _ => Err(GraphError::Format(format!("cannot parse edge `{spec}`"))),
        }
    }

    /// The image of this edge under the rotation `i -> i + 1`.
    pub fn rotated(&self, by: isize) -> GnEdge {
        GnEdge {
            section: wrap_index(self.section as isize + by, self.n),
            ..*self
        }
    }

    pub fn labels(&self) -> (String, String) {
        let (a, b) = self.endpoints();
        (a.label(), b.label())
    }
}

impl fmt::Display for GnEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.labels();
        write!(f, "{a}{b}")
    }
}

/// Every edge of `G_n`, section by section.
pub fn gn_edges(n: usize) -> Vec<GnEdge> {
    (1..=n)
        .flat_map(|i| {
            SectionEdge::ALL.into_iter().map(move |k| GnEdge {
                n,
                section: i,
                kind: k,
            })
        })
        .collect()
}

/// `G_n = C_n ∘ K̄₂`, relabeled `(i,0) -> x_i`, `(i,1) -> y_i`.
pub fn family_gn(n: usize) -> Result<Graph, GraphError> {
    let product = lex_product(&make_cycle(n)?, &make_empty(2)?);
    let g = product.relabel(|l| gn_product_label(l).expect("cycle-product label"))?;
    Ok(g.with_family(Family::Gn { n }))
}

fn gn_product_label(l: &str) -> Option<String> {
    let inner = l.strip_prefix('(')?.strip_suffix(')')?;
    let (i, a) = inner.split_once(',')?;
    let side = match a {
        "0" => Side::X,
        "1" => Side::Y,
        _ => return None,
    };
    Some(
        GnVertex {
            side,
            index: i.parse().ok()?,
        }
        .label(),
    )
}

/// `M_n = C_n ∘ K₂`: `G_n` plus the matching `{x_i y_i}`.
pub fn family_mn(n: usize) -> Result<Graph, GraphError> {
    let product = lex_product(&make_cycle(n)?, &make_complete(2)?);
    let g = product.relabel(|l| gn_product_label(l).expect("cycle-product label"))?;
    Ok(g.with_family(Family::Mn { n }))
}

/// `H_n = G_n □ K₂`, labels `(x3,0)`, `(y3,1)`, ...
pub fn family_hn(n: usize) -> Result<Graph, GraphError> {
    let g = family_gn(n)?;
    Ok(cartesian_product(&g, &make_complete(2)?).with_family(Family::Hn { n }))
}

/// The `x_i`/`y_i` structure of a graph labeled like `G_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnLabels {
    pub n: usize,
    x: Vec<VertexId>,
    y: Vec<VertexId>,
}

impl GnLabels {
    /// Reads the labeling; the vertex set must be exactly `x1..xn, y1..yn`.
    pub fn from_graph(g: &Graph) -> Result<GnLabels, GraphError> {
        if !g.vertex_count().is_multiple_of(2) || g.vertex_count() < 6 {
            return Err(GraphError::NotGn(
                "vertex count is not 2n with n >= 3".into(),
            ));
        }
        let n = g.vertex_count() / 2;
        let mut x = vec![usize::MAX; n];
        let mut y = vec![usize::MAX; n];
        for (v, l) in g.labels().iter().enumerate() {
            let gv = GnVertex::parse(l)
                .filter(|gv| gv.index <= n)
                .ok_or_else(|| GraphError::NotGn(format!("label `{l}` is not x_i/y_i")))?;
            let slot = match gv.side {
                Side::X => &mut x[gv.index - 1],
                Side::Y => &mut y[gv.index - 1],
            };
            *slot = v;
        }
        if x.iter().chain(&y).any(|&v| v == usize::MAX) {
            return Err(GraphError::NotGn("missing x_i/y_i labels".into()));
        }
        Ok(GnLabels { n, x, y })
    }

    pub fn vertex(&self, v: GnVertex) -> VertexId {
        match v.side {
            Side::X => self.x[v.index - 1],
            Side::Y => self.y[v.index - 1],
        }
    }

    pub fn edge_id(&self, g: &Graph, e: GnEdge) -> Option<EdgeId> {
        let (a, b) = e.endpoints();
        g.find_edge(self.vertex(a), self.vertex(b))
    }
}

/// The section `L^i`: the subgraph induced by `{x_i, x_{i+1}, y_i, y_{i+1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSection {
    pub index: usize,
    /// Edge ids in the order `x_i x_{i+1}`, `x_i y_{i+1}`, `y_i x_{i+1}`, `y_i y_{i+1}`.
    pub edges: [EdgeId; 4],
    /// `x_i`, `x_{i+1}`, `y_i`, `y_{i+1}`.
    pub vertices: [VertexId; 4],
}

/// Extracts `L^i` from a `G_n`-labeled graph, `1 <= i <= n`.
pub fn l_section(g: &Graph, i: usize) -> Result<LSection, GraphError> {
    let labels = GnLabels::from_graph(g)?;
    l_section_with(g, &labels, i)
}

pub(crate) fn l_section_with(
    g: &Graph,
    labels: &GnLabels,
    i: usize,
) -> Result<LSection, GraphError> {
    let n = labels.n;
    if i < 1 || i > n {
        return Err(GraphError::InvalidParameter(format!(
            "section index {i} outside 1..={n}"
        )));
    }
    let mut edges = [0; 4];
    for (slot, kind) in edges.iter_mut().zip(SectionEdge::ALL) {
        let e = GnEdge {
            n,
            section: i,
            kind,
        };
        *slot = labels.edge_id(g, e).ok_or_else(|| {
            let (a, b) = e.labels();
            GraphError::NotGn(format!("edge {a}{b} of L^{i} is missing"))
        })?;
    }
    let j = wrap_index(i as isize + 1, n);
    let v = |side, index| labels.vertex(GnVertex { side, index });
    Ok(LSection {
        index: i,
        edges,
        vertices: [v(Side::X, i), v(Side::X, j), v(Side::Y, i), v(Side::Y, j)],
    })
}

/// All sections `L^1..L^n` of a `G_n`-labeled graph.
pub fn l_sections(g: &Graph) -> Result<Vec<LSection>, GraphError> {
    let labels = GnLabels::from_graph(g)?;
    (1..=labels.n)
        .map(|i| l_section_with(g, &labels, i))
        .collect()
}

/// `μ(0) = n`, `μ(n+1) = 1`, identity otherwise; defined for `0 <= j <= n+1`.
pub fn mu(j: usize, n: usize) -> Result<usize, GraphError> {
    if j > n + 1 {
        return Err(GraphError::InvalidParameter(format!(
            "mu({j}) undefined for n = {n}"
        )));
    }
    Ok(if j == 0 {
        n
    } else if j == n + 1 {
        1
    } else {
        j
    })
}

// ---------------------------------------------------------------------------
// Closed-form crossing numbers

/// Whether a closed-form value is a theorem or only conjectured.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaStatus {
    Proven,
    Conjectural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: u64,
    pub status: FormulaStatus,
}

/// Zarankiewicz's formula `⌊m/2⌋⌊(m−1)/2⌋⌊n/2⌋⌊(n−1)/2⌋` for `cr(K_{m,n})`.
///
/// Proven for `min(m,n) <= 6`, and for `m = 7, n <= 10`.
pub fn zarankiewicz_value(m: u64, n: u64) -> FormulaValue {
    let value = (m / 2) * (m.saturating_sub(1) / 2) * (n / 2) * (n.saturating_sub(1) / 2);
    let (lo, hi) = (m.min(n), m.max(n));
    let proven = lo <= 6 || (lo == 7 && hi <= 10);
    FormulaValue {
        value,
        status: if proven {
            FormulaStatus::Proven
        } else {
            FormulaStatus::Conjectural
        },
    }
}

/// Guy's formula `¼⌊n/2⌋⌊(n−1)/2⌋⌊(n−2)/2⌋⌊(n−3)/2⌋` for `cr(K_n)`; proven for `n <= 12`.
pub fn guy_value(n: u64) -> FormulaValue {
    let f = |k: u64| n.saturating_sub(k) / 2;
    FormulaValue {
        value: f(0) * f(1) * f(2) * f(3) / 4,
        status: if n <= 12 {
            FormulaStatus::Proven
        } else {
            FormulaStatus::Conjectural
        },
    }
}
