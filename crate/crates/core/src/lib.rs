//! Crossing-number toolkit for the 4-regular family `G_n = C_n ∘ K̄₂` and its
//! relatives: graph constructions, planarity with Kuratowski witnesses, an
//! exact branch-and-bound crossing-number solver, exact rational drawings
//! with certified crossing counts, and an auditor for the counting
//! inequalities behind the lower bound `cr(G_n) >= n`.

pub mod audit;
pub mod drawing;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod layout;
pub mod planarity;
pub mod solver;
pub mod svg;
pub mod validator;

pub use drawing::Drawing;
pub use error::{AuditError, DrawingError, GraphError, SolverError};
pub use graph::{Family, Graph};
