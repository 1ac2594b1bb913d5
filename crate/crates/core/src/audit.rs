//! Mechanical checks of the section-counting argument for `cr(G_n) >= n`
//! against a concrete good drawing.
//!
//! For a drawing `φ` of `G_n`, `γ(L^i)` is the number of crossed edges of
//! section `L^i`, `U₀ = {i : γ(L^i) = 0}` and
//! `U₁ = {1..n} ∖ {μ(i), μ(i-1), μ(i+1) : i ∈ U₀}`. The chain
//!
//! ```text
//! total >= cr(E_U₁, E_U₁) + cr(E_U₁, E_Ū₁) + Σ_{j∈U₀} cr(E(L^μ(j-1)), E(L^μ(j+1)))
//!       >= |U₁| + 4|U₀|
//!       >= n
//! ```
//!
//! applies when no section has `γ = 1`; otherwise the drawing falls under
//! the contraction case, which is only detected here.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{AuditError, GraphError};
use crate::graph::{l_section_with, mu, EdgeId, GnLabels, LSection};
use crate::validator::{scan, Crossings};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim2Check {
    pub u: Vec<usize>,
    /// `cr(E_U, E_U) + cr(E_U, E_Ū)`.
    pub lhs: usize,
    pub size: usize,
    /// Whether `γ(L^i) >= 2` for every `i ∈ U`.
    pub precondition: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim3Check {
    pub i: usize,
    /// `γ(L^i) = 0`.
    pub applicable: bool,
    /// `[μ(i-1), μ(i+1)]`.
    pub neighbors: [usize; 2],
    pub count: usize,
    /// `None` when not applicable.
    pub pass: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub total: usize,
    /// `cr(E_U₁, E_U₁) + cr(E_U₁, E_Ū₁)`.
    pub claim2_part: usize,
    /// `Σ_{j∈U₀} cr(E(L^μ(j-1)), E(L^μ(j+1)))`.
    pub claim3_part: usize,
    /// `|U₁| + 4|U₀|`.
    pub bound: usize,
    pub n: usize,
    /// `total >= claim2_part + claim3_part`.
    pub total_covers_sum: bool,
    /// `claim2_part + claim3_part >= bound`.
    pub sum_covers_bound: bool,
    /// `bound >= n`.
    pub bound_covers_n: bool,
}

impl ChainCheck {
    pub fn holds(&self) -> bool {
        self.total_covers_sum && self.sum_covers_bound && self.bound_covers_n
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum AuditCase {
    /// No section has `γ = 1`; the chain is evaluated.
    Chain,
    /// Some sections have `γ = 1`; the contraction case applies instead.
    ContractionCase { sections: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Definitions {
    /// `0 <= γ <= 4` for every section.
    pub gamma_in_range: bool,
    /// `Σ γ <= 2 · total`.
    pub gamma_sum_bounded: bool,
    /// `U₁ ∩ U₀ = ∅`.
    pub u1_avoids_u0: bool,
    /// `3|U₀| + |U₁| >= n`.
    pub cover_bound: bool,
}

impl Definitions {
    pub fn hold(&self) -> bool {
        self.gamma_in_range && self.gamma_sum_bounded && self.u1_avoids_u0 && self.cover_bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub total_crossings: usize,
    pub gamma: Vec<usize>,
    pub u0: Vec<usize>,
    pub u1: Vec<usize>,
    pub definitions: Definitions,
    pub case: AuditCase,
    pub claim2: Vec<Claim2Check>,
    pub claim3: Vec<Claim3Check>,
    pub chain: Option<ChainCheck>,
    /// `total >= n`, checked for `n >= 4`.
    pub lower_bound: bool,
    pub pass: bool,
}

struct Context {
    n: usize,
    sections: Vec<LSection>,
    crossings: Crossings,
    gamma: Vec<usize>,
}

impl Context {
    fn new(d: &Drawing) -> Result<Context, AuditError> {
        let g = d.graph();
        let labels = GnLabels::from_graph(g)?;
        let n = labels.n;
        if g.edge_count() != 4 * n {
            return Err(GraphError::NotGn(format!(
                "expected {} edges, found {}",
                4 * n,
                g.edge_count()
            ))
            .into());
        }
        let sections = (1..=n)
            .map(|i| l_section_with(g, &labels, i))
            .collect::<Result<Vec<_>, _>>()?;
        let scan = scan(d);
        let report = scan.goodness(d);
        if !report.is_good() {
            return Err(AuditError::NotGood(report.diagnostics.join("; ")));
        }
        let crossings = scan.into_crossings(d)?;
        let crossed = crossings.crossed_edges();
        let gamma = sections
            .iter()
            .map(|s| s.edges.iter().filter(|&&e| crossed[e]).count())
            .collect();
        Ok(Context {
            n,
            sections,
            crossings,
            gamma,
        })
    }

    fn gamma(&self, i: usize) -> usize {
        self.gamma[i - 1]
    }

    fn edges_of(&self, indices: impl IntoIterator<Item = usize>) -> Vec<EdgeId> {
        indices
            .into_iter()
            .flat_map(|i| self.sections[i - 1].edges)
            .collect()
    }

    fn between(&self, a: &[EdgeId], b: &[EdgeId]) -> usize {
        self.crossings
            .between(a, b)
            .expect("section edges are edges")
    }

    fn claim2(&self, u: &[usize]) -> Result<Claim2Check, AuditError> {
        let set: BTreeSet<usize> = u.iter().copied().collect();
        if let Some(&i) = set.iter().find(|&&i| i < 1 || i > self.n) {
            return Err(GraphError::InvalidParameter(format!(
                "section index {i} outside 1..={}",
                self.n
            ))
            .into());
        }
        let inside = self.edges_of(set.iter().copied());
        let outside = self.edges_of((1..=self.n).filter(|i| !set.contains(i)));
        let lhs = self.between(&inside, &inside) + self.between(&inside, &outside);
        Ok(Claim2Check {
            u: set.iter().copied().collect(),
            lhs,
            size: set.len(),
            precondition: set.iter().all(|&i| self.gamma(i) >= 2),
            pass: lhs >= set.len(),
        })
    }

    fn claim3(&self, i: usize) -> Result<Claim3Check, AuditError> {
        if i < 1 || i > self.n {
            return Err(GraphError::InvalidParameter(format!(
                "section index {i} outside 1..={}",
                self.n
            ))
            .into());
        }
        let neighbors = [mu(i - 1, self.n)?, mu(i + 1, self.n)?];
        let count = self.between(
            &self.edges_of([neighbors[0]]),
            &self.edges_of([neighbors[1]]),
        );
        let applicable = self.gamma(i) == 0;
        Ok(Claim3Check {
            i,
            applicable,
            neighbors,
            count,
            pass: applicable.then_some(count >= 4),
        })
    }
}

/// `γ(L^i)` for `i = 1..=n`.
pub fn gamma_values(d: &Drawing) -> Result<Vec<usize>, AuditError> {
    Ok(Context::new(d)?.gamma)
}

pub fn audit_claim2(d: &Drawing, u: &[usize]) -> Result<Claim2Check, AuditError> {
    Context::new(d)?.claim2(u)
}

pub fn audit_claim3(d: &Drawing, i: usize) -> Result<Claim3Check, AuditError> {
    Context::new(d)?.claim3(i)
}

pub fn audit_chain(d: &Drawing) -> Result<AuditReport, AuditError> {
    let cx = Context::new(d)?;
    let n = cx.n;
    let total = cx.crossings.count();

    let u0: Vec<usize> = (1..=n).filter(|&i| cx.gamma(i) == 0).collect();
    let mut covered = BTreeSet::new();
    for &i in &u0 {
        covered.insert(mu(i, n)?);
        covered.insert(mu(i - 1, n)?);
        covered.insert(mu(i + 1, n)?);
    }
    let u1: Vec<usize> = (1..=n).filter(|i| !covered.contains(i)).collect();

    let definitions = Definitions {
        gamma_in_range: cx.gamma.iter().all(|&g| g <= 4),
        gamma_sum_bounded: cx.gamma.iter().sum::<usize>() <= 2 * total,
        u1_avoids_u0: u1.iter().all(|i| !u0.contains(i)),
        cover_bound: 3 * u0.len() + u1.len() >= n,
    };

    let ones: Vec<usize> = (1..=n).filter(|&i| cx.gamma(i) == 1).collect();
    let case = if ones.is_empty() {
        AuditCase::Chain
    } else {
        AuditCase::ContractionCase { sections: ones }
    };

    // Claim 2 on the largest set meeting its precondition, and on U₁.
    let mut claim2 = Vec::new();
    let heavy: Vec<usize> = (1..=n).filter(|&i| cx.gamma(i) >= 2).collect();
    claim2.push(cx.claim2(&heavy)?);
    if case == AuditCase::Chain && u1 != heavy {
        claim2.push(cx.claim2(&u1)?);
    }
    let claim3 = (1..=n)
        .map(|i| cx.claim3(i))
        .collect::<Result<Vec<_>, _>>()?;

    let chain = if case == AuditCase::Chain {
        let u1_edges = cx.edges_of(u1.iter().copied());
        let rest = cx.edges_of((1..=n).filter(|i| !u1.contains(i)));
        let claim2_part = cx.between(&u1_edges, &u1_edges) + cx.between(&u1_edges, &rest);
        let claim3_part: usize = claim3
            .iter()
            .filter(|c| c.applicable)
            .map(|c| c.count)
            .sum();
        let bound = u1.len() + 4 * u0.len();
        Some(ChainCheck {
            total,
            claim2_part,
            claim3_part,
            bound,
            n,
            total_covers_sum: total >= claim2_part + claim3_part,
            sum_covers_bound: claim2_part + claim3_part >= bound,
            bound_covers_n: bound >= n,
        })
    } else {
        None
    };

    let lower_bound = n < 4 || total >= n;
    let pass = definitions.hold()
        && claim2.iter().all(|c| !c.precondition || c.pass)
        && claim3.iter().all(|c| c.pass != Some(false))
        && chain.as_ref().is_none_or(ChainCheck::holds)
        && lower_bound;

    Ok(AuditReport {
        n,
        total_crossings: total,
        gamma: cx.gamma,
        u0,
        u1,
        definitions,
        case,
        claim2,
        claim3,
        chain,
        lower_bound,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{canonical_drawing_gn, canonical_drawing_mn};

    #[test]
    fn canonical_g5() {
        let d = canonical_drawing_gn(5).unwrap();
        assert_eq!(gamma_values(&d).unwrap(), vec![2; 5]);
        let c = audit_claim2(&d, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!((c.lhs, c.size, c.pass), (5, 5, true));
        let r = audit_chain(&d).unwrap();
        assert!(r.pass);
        assert!(r.u0.is_empty());
        assert_eq!(r.u1, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn empty_claim2_is_trivial() {
        let d = canonical_drawing_gn(4).unwrap();
        let c = audit_claim2(&d, &[]).unwrap();
        assert_eq!((c.lhs, c.size, c.pass), (0, 0, true));
    }

    #[test]
    fn planar_g3_has_zero_gamma() {
        let d = canonical_drawing_gn(3).unwrap();
        assert_eq!(gamma_values(&d).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn refuses_non_gn() {
        let d = canonical_drawing_mn(5).unwrap();
        assert!(matches!(audit_chain(&d), Err(AuditError::Graph(_))));
    }
}
