//! Exact crossing numbers by branch and bound over planarizations.
//!
//! `decide_cr_le_k` searches for at most `k` crossings that make the
//! planarization planar. At every node it extracts a Kuratowski witness of
//! the current planarization and branches on each admissible pair of witness
//! pieces: any drawing extending the current partial plan must cross two of
//! them.
//!
//! The search only considers *good* drawings: crossing edges are distinct
//! and non-adjacent, and a pair of edges crosses at most once. Some drawing
//! attaining `cr(G)` always has this form (the usual redrawing argument:
//! remove crossings between adjacent edges and double crossings by swapping
//! edge segments, each step lowering the crossing count). Every returned
//! plan therefore certifies an upper bound, and an exhausted search at `k`
//! certifies `cr(G) > k` under that normalization.

mod plan;
mod search;

pub use plan::{CrossingPlan, PlanCrossing, Planarization};
pub use search::{
    check_critical, compute_cr, decide_cr_le_k, euler_lower_bound, Budget, CrOutcome, CrResult,
    CriticalReport, DecideReport, Decision, EdgeSelection, EdgeVerdict, LowerBound,
};
