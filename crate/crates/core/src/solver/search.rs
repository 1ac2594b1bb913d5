use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::plan::{CrossingPlan, EdgeChains, PlanCrossing};
use crate::error::SolverError;
use crate::graph::{EdgeId, Graph};
use crate::planarity::{is_planar_simple, kuratowski_witness};

/// Node and wall-clock caps for a search. Either may be absent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Budget {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn seconds(s: u64) -> Budget {
        Budget {
            max_nodes: None,
            max_time: Some(Duration::from_secs(s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Decision {
    /// A plan with at most `k` crossings and a planar planarization.
    Feasible { plan: CrossingPlan },
    /// The search tree was exhausted: no good drawing with at most `k` crossings.
    Infeasible,
    /// A node or time cap was hit before the search finished.
    OutOfBudget,
}

impl Decision {
    pub fn plan(&self) -> Option<&CrossingPlan> {
        match self {
            Decision::Feasible { plan } => Some(plan),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecideReport {
    pub k: usize,
    pub decision: Decision,
    pub nodes: u64,
    pub duplicates_pruned: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `max(0, |E| − 3|V| + 6)` for `|V| >= 3`, else 0.
pub fn euler_lower_bound(g: &Graph) -> usize {
    euler_bound(g.vertex_count(), g.edge_count())
}

fn euler_bound(v: usize, e: usize) -> usize {
    if v < 3 {
        return 0;
    }
    (e + 6).saturating_sub(3 * v)
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    budget: Budget,
    start: Instant,
    nodes: u64,
    duplicates: u64,
    seen: HashSet<Vec<u16>>,
    out_of_budget: bool,
}

impl Search<'_> {
    fn over_budget(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.out_of_budget = true;
            }
        }
        if let Some(limit) = self.budget.max_time {
            if self.nodes.is_multiple_of(64) && self.start.elapsed() > limit {
                self.out_of_budget = true;
            }
        }
        self.out_of_budget
    }

    /// Returns the realized crossings on success.
    fn dfs(&mut self, state: &EdgeChains, path: &mut Vec<PlanCrossing>) -> bool {
        self.nodes += 1;
        if self.over_budget() {
            return false;
        }
        let used = state.dummies.len();
        let p = state.planarization(self.g);
        // each further crossing adds one vertex and two edges
        if euler_bound(p.vertex_count, p.edges.len()) > self.k - used {
            return false;
        }
        if is_planar_simple(p.vertex_count, &p.edges) {
            return true;
        }
        if used == self.k {
            return false;
        }
        let witness = kuratowski_witness(p.vertex_count, &p.edges)
            .expect("non-planar planarization has a witness");
        let mut pieces: Vec<(EdgeId, usize)> = witness.iter().map(|&i| p.pieces[i]).collect();
        pieces.sort_unstable();

        let mut candidates = Vec::new();
        for (i, &(e, pe)) in pieces.iter().enumerate() {
            for &(f, pf) in &pieces[i + 1..] {
                if e == f || self.g.edges_adjacent(e, f) || state.crossed(e, f) {
                    continue;
                }
                candidates.push(PlanCrossing {
                    edges: [e, f],
                    positions: [pe, pf],
                });
            }
        }
        candidates.sort_unstable();

        for c in candidates {
            let mut next = state.clone();
            next.realize(c);
            if !self.seen.insert(next.canonical_key()) {
                self.duplicates += 1;
                continue;
            }
            path.push(c);
            if self.dfs(&next, path) {
                return true;
            }
            path.pop();
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Decides whether `g` has a good drawing with at most `k` crossings.
pub fn decide_cr_le_k(g: &Graph, k: i64, budget: Budget) -> Result<DecideReport, SolverError> {
    if k < 0 {
        return Err(SolverError::NegativeK(k));
    }
    let k = k as usize;
    let start = Instant::now();
    let mut search = Search {
        g,
        k,
        budget,
        start,
        nodes: 0,
        duplicates: 0,
        seen: HashSet::new(),
        out_of_budget: false,
    };
    let root = EdgeChains::new(g.edge_count());
    search.seen.insert(root.canonical_key());
    let mut path = Vec::new();
    let found = search.dfs(&root, &mut path);
    let decision = if found {
        Decision::Feasible {
            plan: CrossingPlan { crossings: path },
        }
    } else if search.out_of_budget {
        Decision::OutOfBudget
    } else {
        Decision::Infeasible
    };
    Ok(DecideReport {
        k,
        decision,
        nodes: search.nodes,
        duplicates_pruned: search.duplicates,
        elapsed: start.elapsed(),
    })
}

/// Where the lower bound `cr >= value` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum LowerBound {
    /// `cr = 0`; nothing to prove.
    Trivial,
    /// The decision at `k` exhausted its search tree, so `cr > k`.
    Exhausted { k: usize, nodes: u64 },
    /// Euler's formula: `cr >= |E| - 3|V| + 6`.
    Euler { bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrResult {
    pub cr: usize,
    pub witness_plan: CrossingPlan,
    pub nodes_explored: u64,
    pub lower_bound: LowerBound,
    pub decisions: Vec<DecideReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CrOutcome {
    Exact(CrResult),
    /// The budget (or `max_k`) ran out first: `lower <= cr`, and `cr <= upper` when known.
    Bounded {
        lower: usize,
        upper: Option<usize>,
        nodes_explored: u64,
        decisions: Vec<DecideReport>,
    },
}

impl CrOutcome {
    pub fn exact(&self) -> Option<&CrResult> {
        match self {
            CrOutcome::Exact(r) => Some(r),
            CrOutcome::Bounded { .. } => None,
        }
    }
}

/// Computes `cr(g)` by deciding `k = L, L+1, ...` from the Euler bound `L`.
///
/// The budget is shared by all decisions. When `max_k` is given, the search
/// stops after that value.
pub fn compute_cr(g: &Graph, budget: Budget, max_k: Option<usize>) -> CrOutcome {
    let start = Instant::now();
    let euler = euler_lower_bound(g);
    let mut lower = euler;
    let mut lower_source = if euler > 0 {
        LowerBound::Euler { bound: euler }
    } else {
        LowerBound::Trivial
    };
    let mut decisions = Vec::new();
    let mut nodes = 0;
    let mut k = euler;
    loop {
        if max_k.is_some_and(|m| k > m) {
            return CrOutcome::Bounded {
                lower,
                upper: None,
                nodes_explored: nodes,
                decisions,
            };
        }
        let remaining = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(nodes)),
            max_time: budget.max_time.map(|t| t.saturating_sub(start.elapsed())),
        };
        let report = decide_cr_le_k(g, k as i64, remaining).expect("k is non-negative");
        nodes += report.nodes;
        match &report.decision {
            Decision::Feasible { plan } => {
                let plan = plan.clone();
                decisions.push(report);
                return CrOutcome::Exact(CrResult {
                    cr: k,
                    witness_plan: plan,
                    nodes_explored: nodes,
                    lower_bound: lower_source,
                    decisions,
                });
            }
            Decision::Infeasible => {
                lower = k + 1;
                lower_source = LowerBound::Exhausted {
                    k,
                    nodes: report.nodes,
                };
                decisions.push(report);
                k += 1;
            }
            Decision::OutOfBudget => {
                decisions.push(report);
                return CrOutcome::Bounded {
                    lower,
                    upper: None,
                    nodes_explored: nodes,
                    decisions,
                };
            }
        }
    }
}

/// Which edges to test for criticality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeSelection {
    All,
    Edges(Vec<EdgeId>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeVerdict {
    pub edge: String,
    /// `cr(g - e) <= cr(g) - 1` was established.
    pub drops: bool,
    pub decision: Decision,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalReport {
    pub cr: usize,
    pub verdicts: Vec<EdgeVerdict>,
    /// Every tested edge deletion lowers the crossing number.
    pub critical: bool,
    /// Some decision ran out of budget, so a `false` verdict is inconclusive.
    pub incomplete: bool,
}

/// For every selected edge `e`, decides `cr(g - e) <= cr_g - 1`.
pub fn check_critical(
    g: &Graph,
    cr_g: usize,
    edges: &EdgeSelection,
    budget: Budget,
) -> Result<CriticalReport, SolverError> {
    if cr_g == 0 {
        return Err(SolverError::PlanarCriticality);
    }
    let ids: Vec<EdgeId> = match edges {
        EdgeSelection::All => (0..g.edge_count()).collect(),
        EdgeSelection::Edges(ids) => {
            if let Some(&bad) = ids.iter().find(|&&e| e >= g.edge_count()) {
                return Err(SolverError::Graph(
                    crate::error::GraphError::InvalidParameter(format!(
                        "edge id {bad} out of range"
                    )),
                ));
            }
            ids.clone()
        }
    };
    let mut verdicts = Vec::with_capacity(ids.len());
    for e in ids {
        let h = g.without_edge(e);
        let report = decide_cr_le_k(&h, cr_g as i64 - 1, budget)?;
        verdicts.push(EdgeVerdict {
            edge: g.edge_key(e),
            drops: matches!(report.decision, Decision::Feasible { .. }),
            decision: report.decision,
            nodes: report.nodes,
        });
    }
    let critical = verdicts.iter().all(|v| v.drops);
    let incomplete = verdicts
        .iter()
        .any(|v| matches!(v.decision, Decision::OutOfBudget));
    Ok(CriticalReport {
        cr: cr_g,
        verdicts,
        critical,
        incomplete,
    })
}
