//! Exact crossing enumeration and good-drawing checks.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::DrawingError;
use crate::geometry::{on_segment, segment_contact, Contact, Point, Rational};
use crate::graph::{EdgeId, VertexId};

/// A transversal crossing between interiors of segments of two edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CrossingRecord {
    /// `edges[0] < edges[1]`.
    pub edges: [EdgeId; 2],
    /// Segment index within each polyline, aligned with `edges`.
    pub segments: [usize; 2],
    #[serde(serialize_with = "serialize_point")]
    pub point: Point,
}

fn serialize_point<S: serde::Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
    [p.x.to_string(), p.y.to_string()].serialize(s)
}

/// Geometry that is not a crossing and not an allowed contact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Defect {
    /// A vertex lies on an edge not incident to it.
    VertexOnEdge { vertex: VertexId, edge: EdgeId },
    /// Segments of two edges share a piece of positive length.
    Overlap { edges: [EdgeId; 2] },
    /// Two edges touch without crossing, away from any vertex.
    Touch { edges: [EdgeId; 2] },
    /// A polyline meets itself other than at consecutive joints.
    SelfContact { edge: EdgeId },
}

/// Every crossing and every defect of a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scan {
    pub records: Vec<CrossingRecord>,
    pub defects: Vec<Defect>,
}

struct Segment<'a> {
    edge: EdgeId,
    index: usize,
    a: &'a Point,
    b: &'a Point,
}

impl<'a> Segment<'a> {
    fn lo(&self) -> &'a Rational {
        if self.a.x <= self.b.x {
            &self.a.x
        } else {
            &self.b.x
        }
    }

    fn hi(&self) -> &'a Rational {
        if self.a.x <= self.b.x {
            &self.b.x
        } else {
            &self.a.x
        }
    }
}

/// Enumerates all segment contacts of `d` in exact arithmetic.
pub fn scan(d: &Drawing) -> Scan {
    let g = d.graph();
    let vertex_at: HashMap<&Point, VertexId> = d
        .positions()
        .iter()
        .enumerate()
        .map(|(v, p)| (p, v))
        .collect();
    let segments: Vec<Segment> = d
        .polylines()
        .iter()
        .enumerate()
        .flat_map(|(e, line)| {
            line.windows(2).enumerate().map(move |(i, w)| Segment {
                edge: e,
                index: i,
                a: &w[0],
                b: &w[1],
            })
        })
        .collect();

    let mut records = Vec::new();
    let mut defects = Vec::new();

    // Sweep over x-extents: only segments whose x-ranges meet are compared.
    let mut order: Vec<usize> = (0..segments.len()).collect();
    order.sort_by(|&i, &j| segments[i].lo().cmp(segments[j].lo()));
    let mut by_x: Vec<VertexId> = (0..d.positions().len()).collect();
    by_x.sort_by(|&u, &v| d.position(u).x.cmp(&d.position(v).x));

    for s in &segments {
        let (a, b) = g.edge(s.edge);
        let start = by_x.partition_point(|&v| &d.position(v).x < s.lo());
        for &v in &by_x[start..] {
            let p = d.position(v);
            if &p.x > s.hi() {
                break;
            }
            if a != v && b != v && on_segment(p, s.a, s.b) {
                defects.push(Defect::VertexOnEdge {
                    vertex: v,
                    edge: s.edge,
                });
            }
        }
    }

    for (k, &i) in order.iter().enumerate() {
        let s = &segments[i];
        for &j in &order[k + 1..] {
            let t = &segments[j];
            if t.lo() > s.hi() {
                break;
            }
            let (s, t) = if (s.edge, s.index) < (t.edge, t.index) {
                (s, t)
            } else {
                (t, s)
            };
            let contact = segment_contact(s.a, s.b, t.a, t.b);
            if s.edge == t.edge {
                let consecutive = t.index == s.index + 1;
                let fine = match &contact {
                    Contact::Disjoint => true,
                    Contact::Touch(p) => consecutive && p == t.a,
                    _ => false,
                };
                if !fine {
                    defects.push(Defect::SelfContact { edge: s.edge });
                }
                continue;
            }
            match contact {
                Contact::Disjoint => {}
                Contact::Proper(point) => {
                    let (edges, segs) = if s.edge < t.edge {
                        ([s.edge, t.edge], [s.index, t.index])
                    } else {
                        ([t.edge, s.edge], [t.index, s.index])
                    };
                    records.push(CrossingRecord {
                        edges,
                        segments: segs,
                        point,
                    });
                }
                // Contacts at vertex positions are either shared endpoints or
                // already reported as vertex-on-edge.
                Contact::Touch(p) if vertex_at.contains_key(&p) => {}
                Contact::Touch(_) => defects.push(Defect::Touch {
                    edges: [s.edge.min(t.edge), s.edge.max(t.edge)],
                }),
                Contact::Overlap => defects.push(Defect::Overlap {
                    edges: [s.edge.min(t.edge), s.edge.max(t.edge)],
                }),
            }
        }
    }
    records.sort();
    defects.sort();
    defects.dedup();
    Scan { records, defects }
}

/// The certified crossings of a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossings {
    edge_count: usize,
    pub records: Vec<CrossingRecord>,
}

impl Crossings {
    pub fn count(&self) -> usize {
        self.records.len()
    }

    /// Crossings with one edge in `a` and the other in `b`; with `a == b`,
    /// crossings with both edges in the set, each counted once.
    pub fn between(&self, a: &[EdgeId], b: &[EdgeId]) -> Result<usize, DrawingError> {
        let in_a = self.membership(a)?;
        let in_b = self.membership(b)?;
        Ok(self
            .records
            .iter()
            .filter(|r| {
                let [e, f] = r.edges;
                (in_a[e] && in_b[f]) || (in_b[e] && in_a[f])
            })
            .count())
    }

    /// Whether each edge takes part in at least one crossing.
    pub fn crossed_edges(&self) -> Vec<bool> {
        let mut crossed = vec![false; self.edge_count];
        for r in &self.records {
            crossed[r.edges[0]] = true;
            crossed[r.edges[1]] = true;
        }
        crossed
    }

    fn membership(&self, set: &[EdgeId]) -> Result<Vec<bool>, DrawingError> {
        let mut mask = vec![false; self.edge_count];
        for &e in set {
            if e >= self.edge_count {
                return Err(DrawingError::Missing(format!("edge id {e}")));
            }
            mask[e] = true;
        }
        Ok(mask)
    }
}

fn describe(d: &Drawing, defect: &Defect) -> String {
    let g = d.graph();
    match defect {
        Defect::VertexOnEdge { vertex, edge } => {
            format!(
                "vertex {} lies on edge {}",
                g.label(*vertex),
                g.edge_key(*edge)
            )
        }
        Defect::Overlap { edges } => format!(
            "edges {} and {} overlap",
            g.edge_key(edges[0]),
            g.edge_key(edges[1])
        ),
        Defect::Touch { edges } => format!(
            "edges {} and {} touch without crossing",
            g.edge_key(edges[0]),
            g.edge_key(edges[1])
        ),
        Defect::SelfContact { edge } => format!("edge {} meets itself", g.edge_key(*edge)),
    }
}

impl Scan {
    /// The crossings, if no contact is degenerate.
    pub fn into_crossings(self, d: &Drawing) -> Result<Crossings, DrawingError> {
        if let Some(first) = self.defects.first() {
            return Err(DrawingError::Degenerate(describe(d, first)));
        }
        Ok(Crossings {
            edge_count: d.graph().edge_count(),
            records: self.records,
        })
    }
}

/// Counts crossings; any degenerate contact is an error.
pub fn count_crossings(d: &Drawing) -> Result<Crossings, DrawingError> {
    scan(d).into_crossings(d)
}

/// `crossings_between` on a drawing; see [`Crossings::between`].
pub fn crossings_between(d: &Drawing, a: &[EdgeId], b: &[EdgeId]) -> Result<usize, DrawingError> {
    count_crossings(d)?.between(a, b)
}

/// Good-drawing conditions, with one diagnostic line per violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub no_adjacent_crossings: bool,
    pub no_double_crossings: bool,
    pub no_triple_points: bool,
    pub no_vertex_on_edge: bool,
    /// No overlaps, tangencies or self-contacts.
    pub well_formed: bool,
    pub diagnostics: Vec<String>,
}

impl GoodnessReport {
    pub fn is_good(&self) -> bool {
        self.no_adjacent_crossings
            && self.no_double_crossings
            && self.no_triple_points
            && self.no_vertex_on_edge
            && self.well_formed
    }
}

pub fn check_good(d: &Drawing) -> GoodnessReport {
    scan(d).goodness(d)
}

impl Scan {
    pub fn goodness(&self, d: &Drawing) -> GoodnessReport {
        let g = d.graph();
        let s = self;
        let mut diagnostics = Vec::new();

        let mut no_adjacent_crossings = true;
        let mut pair_counts: BTreeMap<[EdgeId; 2], usize> = BTreeMap::new();
        let mut at_point: BTreeMap<(String, String), Vec<[EdgeId; 2]>> = BTreeMap::new();
        for r in &s.records {
            let [e, f] = r.edges;
            if g.edges_adjacent(e, f) {
                no_adjacent_crossings = false;
                diagnostics.push(format!(
                    "adjacent edges {} and {} cross",
                    g.edge_key(e),
                    g.edge_key(f)
                ));
            }
            *pair_counts.entry(r.edges).or_default() += 1;
            at_point
                .entry((r.point.x.to_string(), r.point.y.to_string()))
                .or_default()
                .push(r.edges);
        }
        let mut no_double_crossings = true;
        for (&[e, f], &c) in &pair_counts {
            if c > 1 {
                no_double_crossings = false;
                diagnostics.push(format!(
                    "pair {} and {} crosses {c} times",
                    g.edge_key(e),
                    g.edge_key(f)
                ));
            }
        }
        let mut no_triple_points = true;
        for ((x, y), pairs) in &at_point {
            if pairs.len() > 1 {
                no_triple_points = false;
                let mut edges: Vec<EdgeId> = pairs.iter().flatten().copied().collect();
                edges.sort_unstable();
                edges.dedup();
                let names: Vec<String> = edges.iter().map(|&e| g.edge_key(e)).collect();
                diagnostics.push(format!(
                    "three or more edges through ({x}, {y}): {}",
                    names.join(", ")
                ));
            }
        }
        let mut no_vertex_on_edge = true;
        let mut well_formed = true;
        for defect in &s.defects {
            match defect {
                Defect::VertexOnEdge { .. } => no_vertex_on_edge = false,
                _ => well_formed = false,
            }
            diagnostics.push(describe(d, defect));
        }
        GoodnessReport {
            no_adjacent_crossings,
            no_double_crossings,
            no_triple_points,
            no_vertex_on_edge,
            well_formed,
            diagnostics,
        }
    }
}
