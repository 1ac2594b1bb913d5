use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("duplicate edge {0}--{1}")]
    DuplicateEdge(String, String),
    #[error("{0}--{1} is not an edge")]
    NotAnEdge(String, String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a G_n-labeled graph: {0}")]
    NotGn(String),
    #[error("malformed graph file: {0}")]
    Format(String),
}

/// Geometry that cannot be certified as a drawing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertices `{0}` and `{1}` share a position")]
    CoincidentVertices(String, String),
    #[error("polyline of {edge} does not start and end at its endpoints")]
    DetachedPolyline { edge: String },
    #[error("polyline of {edge} has a zero-length segment")]
    ZeroLengthSegment { edge: String },
    #[error("missing geometry for {0}")]
    Missing(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("malformed drawing file: {0}")]
    Format(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("negative crossing budget {0}")]
    NegativeK(i64),
    #[error("criticality is undefined for a planar graph (cr = 0)")]
    PlanarCriticality,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error("drawing is not good: {0}")]
    NotGood(String),
}
