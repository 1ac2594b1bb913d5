//! Polyline drawings with exact rational coordinates.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::DrawingError;
use crate::geometry::{Point, Rational};
use crate::graph::{EdgeId, Graph, GraphFile, VertexId};

/// A drawing of a graph: one point per vertex and one polyline per edge.
///
/// Polylines run from the edge's first endpoint (smaller label) to its
/// second and include both endpoint positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    graph: Graph,
    positions: Vec<Point>,
    polylines: Vec<Vec<Point>>,
}

impl Drawing {
    pub fn new(
        graph: Graph,
        positions: Vec<Point>,
        polylines: Vec<Vec<Point>>,
    ) -> Result<Drawing, DrawingError> {
        if positions.len() != graph.vertex_count() {
            return Err(DrawingError::Missing("vertex positions".into()));
        }
        if polylines.len() != graph.edge_count() {
            return Err(DrawingError::Missing("edge polylines".into()));
        }
        let mut at: HashMap<&Point, VertexId> = HashMap::with_capacity(positions.len());
        for (v, p) in positions.iter().enumerate() {
            if let Some(&u) = at.get(p) {
                return Err(DrawingError::CoincidentVertices(
                    graph.label(u).to_string(),
                    graph.label(v).to_string(),
                ));
            }
            at.insert(p, v);
        }
        for (e, line) in polylines.iter().enumerate() {
            let (u, v) = graph.edge(e);
            if line.len() < 2 || line[0] != positions[u] || line[line.len() - 1] != positions[v] {
                return Err(DrawingError::DetachedPolyline {
                    edge: graph.edge_key(e),
                });
            }
            if line.windows(2).any(|w| w[0] == w[1]) {
                return Err(DrawingError::ZeroLengthSegment {
                    edge: graph.edge_key(e),
                });
            }
        }
        Ok(Drawing {
            graph,
            positions,
            polylines,
        })
    }

    /// Every edge drawn as a straight segment.
    pub fn straight_line(graph: Graph, positions: Vec<Point>) -> Result<Drawing, DrawingError> {
        let polylines = graph
            .edges()
            .iter()
            .map(|&(u, v)| vec![positions[u].clone(), positions[v].clone()])
            .collect();
        Drawing::new(graph, positions, polylines)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn position(&self, v: VertexId) -> &Point {
        &self.positions[v]
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn polyline(&self, e: EdgeId) -> &[Point] {
        &self.polylines[e]
    }

    pub fn polylines(&self) -> &[Vec<Point>] {
        &self.polylines
    }

    /// The drawing of `G - e` obtained by erasing edge `e`.
    pub fn without_edge(&self, e: EdgeId) -> Drawing {
        let mut polylines = self.polylines.clone();
        polylines.remove(e);
        Drawing {
            graph: self.graph.without_edge(e),
            positions: self.positions.clone(),
            polylines,
        }
    }

    /// Applies `f` to every vertex position and bend point.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<Drawing, DrawingError> {
        Drawing::new(
            self.graph.clone(),
            self.positions.iter().map(&f).collect(),
            self.polylines
                .iter()
                .map(|l| l.iter().map(&f).collect())
                .collect(),
        )
    }

    /// Moves vertices; polyline ends follow their vertices, bends stay put.
    pub fn with_positions(&self, positions: Vec<Point>) -> Result<Drawing, DrawingError> {
        let polylines = self
            .polylines
            .iter()
            .enumerate()
            .map(|(e, line)| {
                let (u, v) = self.graph.edge(e);
                let mut line = line.clone();
                let last = line.len() - 1;
                line[0] = positions[u].clone();
                line[last] = positions[v].clone();
                line
            })
            .collect();
        Drawing::new(self.graph.clone(), positions, polylines)
    }

    pub fn to_file(&self) -> DrawingFile {
        DrawingFile {
            graph: self.graph.to_file(),
            positions: self
                .positions
                .iter()
                .enumerate()
                .map(|(v, p)| (self.graph.label(v).to_string(), encode_point(p)))
                .collect(),
            polylines: self
                .polylines
                .iter()
                .enumerate()
                .map(|(e, l)| (self.graph.edge_key(e), l.iter().map(encode_point).collect()))
                .collect(),
        }
    }

    pub fn from_file(file: &DrawingFile) -> Result<Drawing, DrawingError> {
        let graph = Graph::from_file(&file.graph)?;
        let positions = graph
            .labels()
            .iter()
            .map(|l| {
                file.positions
                    .get(l)
                    .ok_or_else(|| DrawingError::Missing(format!("position of `{l}`")))
                    .and_then(decode_point)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let polylines = (0..graph.edge_count())
            .map(|e| {
                let key = graph.edge_key(e);
                let raw = file
                    .polylines
                    .get(&key)
                    .ok_or_else(|| DrawingError::Missing(format!("polyline of {key}")))?;
                raw.iter().map(decode_point).collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if file.polylines.len() != graph.edge_count() {
            return Err(DrawingError::Format("polyline for a non-edge".into()));
        }
        Drawing::new(graph, positions, polylines)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("drawing serializes")
    }

    pub fn from_json(text: &str) -> Result<Drawing, DrawingError> {
        let file: DrawingFile =
            serde_json::from_str(text).map_err(|e| DrawingError::Format(e.to_string()))?;
        Drawing::from_file(&file)
    }
}

/// A coordinate as `[numerator, denominator]` decimal strings.
pub type RationalText = [String; 2];
/// A point as `[x, y]`.
pub type PointText = [RationalText; 2];

/// On-disk drawing format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingFile {
    pub graph: GraphFile,
    pub positions: BTreeMap<String, PointText>,
    /// Keyed by `u--v` (labels in lexicographic order).
    pub polylines: BTreeMap<String, Vec<PointText>>,
}

fn encode_rational(q: &Rational) -> RationalText {
    [q.numer().to_string(), q.denom().to_string()]
}

fn encode_point(p: &Point) -> PointText {
    [encode_rational(&p.x), encode_rational(&p.y)]
}

fn decode_rational(t: &RationalText) -> Result<Rational, DrawingError> {
    let parse = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| DrawingError::Format(format!("`{s}` is not an integer")))
    };
    let (num, den) = (parse(&t[0])?, parse(&t[1])?);
    if den == BigInt::from(0) {
        return Err(DrawingError::Format("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

fn decode_point(t: &PointText) -> Result<Point, DrawingError> {
    Ok(Point::new(decode_rational(&t[0])?, decode_rational(&t[1])?))
}
