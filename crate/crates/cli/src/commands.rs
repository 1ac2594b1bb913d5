use std::fmt::Write;
use std::path::Path;
use std::time::Duration;

use crosscert::audit::{audit_chain, AuditCase, AuditReport};
use crosscert::geometry::int;
use crosscert::graph::{
    family_gn, family_hn, family_mn, make_complete, make_complete_bipartite, make_cycle, GnEdge,
    GnLabels, Graph,
};
use crosscert::layout::{
    canonical_drawing_gn, canonical_drawing_mn, deletion_drawing_gn, drawing_hn,
    exchanged_drawing_gn, jittered,
};
use crosscert::planarity::{planarity_verdict, witness_profile};
use crosscert::solver::{
    check_critical, compute_cr, decide_cr_le_k, Budget, CrOutcome, CrossingPlan, Decision,
    EdgeSelection, LowerBound,
};
use crosscert::svg::{to_svg, SvgOptions};
use crosscert::validator::scan;
use crosscert::{AuditError, Drawing};
use serde_json::json;

use crate::manifest::Files;
use crate::{exit, Command, Common, DrawFamily, GenFamily, Outcome};

pub fn run(cmd: &Command, common: &Common, files: &mut Files) -> Result<Outcome, String> {
    let budget = Budget {
        max_nodes: None,
        max_time: Some(Duration::from_secs(common.budget_secs)),
    };
    match cmd {
        Command::Gen {
            family,
            n,
            m,
            output,
        } => gen(*family, *n, *m, output.as_deref(), files),
        Command::Planar { graph } => planar(&load_graph(graph, files)?),
        Command::Solve { graph, max_k } => solve(&load_graph(graph, files)?, budget, *max_k),
        Command::Decide { graph, k } => decide(&load_graph(graph, files)?, *k, budget),
        Command::Critical { graph, cr, edges } => {
            critical(&load_graph(graph, files)?, *cr, edges, budget)
        }
        Command::Draw {
            family,
            n,
            delete,
            exchange,
            jitter,
            output,
            svg,
        } => {
            let spec = DrawSpec {
                family: *family,
                n: *n,
                delete: delete.as_deref(),
                exchange,
                jitter: *jitter,
                seed: common.seed,
            };
            draw(&spec, output.as_deref(), svg.as_deref(), files)
        }
        Command::VerifyDrawing {
            drawing,
            good,
            between,
        } => verify(&load_drawing(drawing, files)?, *good, between.as_deref()),
        Command::Audit { drawing } => audit(&load_drawing(drawing, files)?),
        Command::Reproduce {
            scope,
            jitter_seeds,
        } => Ok(crate::reproduce::run(
            *scope,
            common.seed,
            *jitter_seeds,
            budget,
        )),
    }
}

fn load_graph(path: &Path, files: &mut Files) -> Result<Graph, String> {
    let text = files.read(path)?;
    Graph::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_drawing(path: &Path, files: &mut Files) -> Result<Drawing, String> {
    let text = files.read(path)?;
    Drawing::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn gen(
    family: GenFamily,
    n: usize,
    m: Option<usize>,
    output: Option<&Path>,
    files: &mut Files,
) -> Result<Outcome, String> {
    let g = match family {
        GenFamily::Cycle => make_cycle(n),
        GenFamily::Complete => make_complete(n),
        GenFamily::Biclique => {
            let m = m.ok_or("biclique needs --m")?;
            make_complete_bipartite(m, n)
        }
        GenFamily::Gn => family_gn(n),
        GenFamily::Mn => family_mn(n),
        GenFamily::Hn => family_hn(n),
    }
    .map_err(|e| e.to_string())?;
    let text = g.to_json();
    let summary = json!({
        "family": g.family().map(|f| f.name()),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "output": output.map(|p| p.display().to_string()),
    });
    match output {
        Some(path) => {
            files.write(path, &text)?;
            Ok(Outcome {
                code: exit::OK,
                text: format!(
                    "wrote {}: {} vertices, {} edges\n",
                    path.display(),
                    g.vertex_count(),
                    g.edge_count()
                ),
                json: summary,
            })
        }
        None => Ok(Outcome {
            code: exit::OK,
            text: text.clone(),
            json: serde_json::from_str(&text).expect("graph json"),
        }),
    }
}

fn planar(g: &Graph) -> Result<Outcome, String> {
    let v = planarity_verdict(g);
    let witness: Option<Vec<String>> = v
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&e| g.edge_key(e)).collect());
    let shape = v.witness.as_ref().and_then(|w| {
        let edges: Vec<_> = w.iter().map(|&e| g.edge(e)).collect();
        witness_profile(g.vertex_count(), &edges).map(|s| format!("{s:?}"))
    });
    let mut text = String::new();
    if v.planar {
        text.push_str("planar\n");
    } else {
        let w = witness.as_ref().expect("non-planar graphs carry a witness");
        writeln!(
            text,
            "non-planar: {} subdivision with {} edges",
            shape.as_deref().unwrap_or("Kuratowski"),
            w.len()
        )
        .unwrap();
        writeln!(text, "  {}", w.join(" ")).unwrap();
    }
    Ok(Outcome {
        code: exit::OK,
        text,
        json: json!({ "planar": v.planar, "witness": witness, "shape": shape }),
    })
}

fn plan_json(g: &Graph, plan: &CrossingPlan) -> serde_json::Value {
    let crossings: Vec<[String; 2]> = plan
        .crossings
        .iter()
        .map(|c| [g.edge_key(c.edges[0]), g.edge_key(c.edges[1])])
        .collect();
    let orders: serde_json::Map<String, serde_json::Value> = plan
        .edge_orders(g)
        .into_iter()
        .map(|(e, partners)| (e, json!(partners)))
        .collect();
    json!({ "crossings": crossings, "edge_orders": orders })
}

fn plan_text(g: &Graph, plan: &CrossingPlan) -> String {
    plan.crossings
        .iter()
        .map(|c| {
            format!(
                "  {} x {}\n",
                g.edge_key(c.edges[0]),
                g.edge_key(c.edges[1])
            )
        })
        .collect()
}

fn lower_bound_text(lb: &LowerBound) -> String {
    match lb {
        LowerBound::Trivial => "planar".into(),
        LowerBound::Exhausted { k, nodes } => {
            format!("no drawing with {k} crossings (search exhausted after {nodes} nodes)")
        }
        LowerBound::Euler { bound } => format!("Euler bound {bound}"),
    }
}

fn solve(g: &Graph, budget: Budget, max_k: Option<usize>) -> Result<Outcome, String> {
    match compute_cr(g, budget, max_k) {
        CrOutcome::Exact(r) => Ok(Outcome {
            code: exit::OK,
            text: format!(
                "cr = {}\nlower bound: {}\nnodes explored: {}\nwitness crossings:\n{}",
                r.cr,
                lower_bound_text(&r.lower_bound),
                r.nodes_explored,
                plan_text(g, &r.witness_plan)
            ),
            json: json!({
                "status": "exact",
                "cr": r.cr,
                "lower_bound": r.lower_bound,
                "nodes_explored": r.nodes_explored,
                "plan": plan_json(g, &r.witness_plan),
            }),
        }),
        CrOutcome::Bounded {
            lower,
            upper,
            nodes_explored,
            ..
        } => Ok(Outcome {
            code: exit::BUDGET,
            text: format!(
                "budget exhausted: {lower} <= cr{}\nnodes explored: {nodes_explored}\n",
                upper.map(|u| format!(" <= {u}")).unwrap_or_default()
            ),
            json: json!({
                "status": "bounded",
                "lower": lower,
                "upper": upper,
                "nodes_explored": nodes_explored,
            }),
        }),
    }
}

fn decide(g: &Graph, k: i64, budget: Budget) -> Result<Outcome, String> {
    let r = decide_cr_le_k(g, k, budget).map_err(|e| e.to_string())?;
    let (code, verdict, text) = match &r.decision {
        Decision::Feasible { plan } => (
            exit::OK,
            "feasible",
            format!(
                "cr <= {k}: plan with {} crossings\n{}",
                plan.len(),
                plan_text(g, plan)
            ),
        ),
        Decision::Infeasible => (exit::OK, "infeasible", format!("cr > {k}\n")),
        Decision::OutOfBudget => (exit::BUDGET, "out_of_budget", "budget exhausted\n".into()),
    };
    Ok(Outcome {
        code,
        text: format!("{text}nodes: {}\n", r.nodes),
        json: json!({
            "k": k,
            "decision": verdict,
            "plan": r.decision.plan().map(|p| plan_json(g, p)),
            "nodes": r.nodes,
            "duplicates_pruned": r.duplicates_pruned,
        }),
    })
}

/// Resolves `u--v`, or a `G_n` edge name such as `x1y2`.
fn resolve_edge(g: &Graph, spec: &str) -> Result<usize, String> {
    if let Some((a, b)) = spec.split_once("--") {
        return g
            .find_edge_by_labels(a, b)
            .ok_or_else(|| format!("{spec} is not an edge"));
    }
    if let Ok(labels) = GnLabels::from_graph(g) {
        if let Ok(e) = GnEdge::parse(labels.n, spec) {
            if let Some(id) = labels.edge_id(g, e) {
                return Ok(id);
            }
        }
    }
    Err(format!("{spec} is not an edge"))
}

fn critical(
    g: &Graph,
    cr: Option<usize>,
    edges: &[String],
    budget: Budget,
) -> Result<Outcome, String> {
    let cr = match cr {
        Some(c) => c,
        None => match compute_cr(g, budget, None) {
            CrOutcome::Exact(r) => r.cr,
            CrOutcome::Bounded { lower, upper, .. } => {
                return Ok(Outcome {
                    code: exit::BUDGET,
                    text: "budget exhausted while computing cr(G); pass --cr\n".into(),
                    json: json!({ "status": "bounded", "lower": lower, "upper": upper }),
                })
            }
        },
    };
    let selection = if edges.is_empty() {
        EdgeSelection::All
    } else {
        EdgeSelection::Edges(
            edges
                .iter()
                .map(|s| resolve_edge(g, s))
                .collect::<Result<_, _>>()?,
        )
    };
    let r = check_critical(g, cr, &selection, budget).map_err(|e| e.to_string())?;
    let mut text = format!("cr(G) = {cr}\n");
    for v in &r.verdicts {
        let status = match (&v.decision, v.drops) {
            (_, true) => format!("cr(G - e) <= {}", cr - 1),
            (Decision::OutOfBudget, _) => "budget exhausted".into(),
            _ => format!("cr(G - e) = {cr}"),
        };
        writeln!(text, "  {:<16} {status}", v.edge).unwrap();
    }
    let code = if r.critical {
        text.push_str("crossing-critical\n");
        exit::OK
    } else if r.incomplete {
        text.push_str("inconclusive\n");
        exit::BUDGET
    } else {
        text.push_str("not crossing-critical\n");
        exit::FAILED
    };
    Ok(Outcome {
        code,
        text,
        json: serde_json::to_value(&r).expect("report json"),
    })
}

pub struct DrawSpec<'a> {
    pub family: DrawFamily,
    pub n: usize,
    pub delete: Option<&'a str>,
    pub exchange: &'a [usize],
    pub jitter: Option<i64>,
    pub seed: u64,
}

pub fn build_drawing(spec: &DrawSpec) -> Result<Drawing, String> {
    let gn_only = spec.delete.is_some() || !spec.exchange.is_empty();
    if gn_only && spec.family != DrawFamily::Gn {
        return Err("--delete and --exchange apply to --family gn only".into());
    }
    if spec.delete.is_some() && !spec.exchange.is_empty() {
        return Err("--delete and --exchange cannot be combined".into());
    }
    let d = match spec.family {
        DrawFamily::Gn => match spec.delete {
            Some(e) => {
                let e = GnEdge::parse(spec.n, e).map_err(|e| e.to_string())?;
                deletion_drawing_gn(spec.n, e)
            }
            None if !spec.exchange.is_empty() => exchanged_drawing_gn(spec.n, spec.exchange),
            None => canonical_drawing_gn(spec.n),
        },
        DrawFamily::Mn => canonical_drawing_mn(spec.n),
        DrawFamily::Hn => drawing_hn(spec.n),
    }
    .map_err(|e| e.to_string())?;
    match spec.jitter {
        Some(m) if m > 0 => jittered(&d, spec.seed, &int(m)).map_err(|e| e.to_string()),
        Some(_) => Err("--jitter must be positive".into()),
        None => Ok(d),
    }
}

fn draw(
    spec: &DrawSpec,
    output: Option<&Path>,
    svg: Option<&Path>,
    files: &mut Files,
) -> Result<Outcome, String> {
    let d = build_drawing(spec)?;
    let s = scan(&d);
    let good = s.goodness(&d);
    let count = s.records.len();
    let n = spec.n;
    // The construction's promise, checked against the certified count.
    let (target, met) = match (spec.family, spec.delete, spec.jitter) {
        (_, _, Some(_)) => (None, true),
        (DrawFamily::Gn, Some(_), _) => (Some(format!("<= {}", n - 1)), count < n),
        (DrawFamily::Gn, None, _) if n == 3 => (Some("0".to_string()), count == 0),
        (DrawFamily::Gn | DrawFamily::Mn, _, _) => (Some(n.to_string()), count == n),
        (DrawFamily::Hn, _, _) => (Some(format!("<= {}", 6 * n)), count <= 6 * n),
    };
    if let Some(path) = output {
        files.write(path, &d.to_json())?;
    }
    if let Some(path) = svg {
        files.write(path, &to_svg(&d, &SvgOptions::default()))?;
    }
    let ok = met && good.is_good() && s.defects.is_empty();
    let mut text = format!(
        "{} vertices, {} edges, {count} crossings{}\ngood: {}\n",
        d.graph().vertex_count(),
        d.graph().edge_count(),
        target
            .as_ref()
            .map(|t| format!(" (target {t})"))
            .unwrap_or_default(),
        good.is_good()
    );
    for line in &good.diagnostics {
        writeln!(text, "  {line}").unwrap();
    }
    if output.is_none() && svg.is_none() {
        text = d.to_json();
    }
    Ok(Outcome {
        code: if ok { exit::OK } else { exit::FAILED },
        text,
        json: json!({
            "vertices": d.graph().vertex_count(),
            "edges": d.graph().edge_count(),
            "crossings": count,
            "target": target,
            "good": good.is_good(),
            "diagnostics": good.diagnostics,
        }),
    })
}

/// Parses `all`, `L3` (a section of G_n) and `u--v`, comma-separated.
fn resolve_edge_set(d: &Drawing, spec: &str) -> Result<Vec<usize>, String> {
    let g = d.graph();
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(0..g.edge_count());
        } else if let Some(i) = item.strip_prefix('L').and_then(|s| s.parse::<usize>().ok()) {
            let s = crosscert::graph::l_section(g, i).map_err(|e| e.to_string())?;
            out.extend(s.edges);
        } else {
            out.push(resolve_edge(g, item)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn verify(d: &Drawing, good: bool, between: Option<&[String]>) -> Result<Outcome, String> {
    let g = d.graph();
    let s = scan(d);
    let report = s.goodness(d);
    let degenerate = !s.defects.is_empty();
    let mut text = String::new();
    let mut json = json!({});
    let mut code = exit::OK;
    if degenerate {
        code = exit::FAILED;
        text.push_str("degenerate drawing:\n");
        for line in report.diagnostics.iter() {
            writeln!(text, "  {line}").unwrap();
        }
        json["degenerate"] = json!(true);
        json["diagnostics"] = json!(report.diagnostics);
    } else {
        let records: Vec<_> = s
            .records
            .iter()
            .map(|r| {
                json!({
                    "edges": [g.edge_key(r.edges[0]), g.edge_key(r.edges[1])],
                    "point": [r.point.x.to_string(), r.point.y.to_string()],
                    "segments": r.segments,
                })
            })
            .collect();
        writeln!(text, "crossings: {}", s.records.len()).unwrap();
        for r in &s.records {
            writeln!(
                text,
                "  {} x {} at ({}, {})",
                g.edge_key(r.edges[0]),
                g.edge_key(r.edges[1]),
                r.point.x,
                r.point.y
            )
            .unwrap();
        }
        json["crossings"] = json!(s.records.len());
        json["records"] = json!(records);
    }
    if good {
        writeln!(text, "good: {}", report.is_good()).unwrap();
        if !degenerate {
            for line in &report.diagnostics {
                writeln!(text, "  {line}").unwrap();
            }
        }
        json["goodness"] = serde_json::to_value(&report).expect("report json");
        if !report.is_good() {
            code = exit::FAILED;
        }
    }
    if let Some([a, b]) = between {
        let ea = resolve_edge_set(d, a)?;
        let eb = resolve_edge_set(d, b)?;
        let crossings = s
            .clone()
            .into_crossings(d)
            .map_err(|e| format!("cannot count crossings: {e}"));
        match crossings {
            Ok(c) => {
                let k = c.between(&ea, &eb).map_err(|e| e.to_string())?;
                writeln!(text, "crossings between {a} and {b}: {k}").unwrap();
                json["between"] = json!({ "sets": [a, b], "count": k });
            }
            Err(e) => {
                writeln!(text, "{e}").unwrap();
                code = exit::FAILED;
            }
        }
    }
    Ok(Outcome { code, text, json })
}

pub fn audit_text(r: &AuditReport) -> String {
    let set = |v: &[usize]| {
        format!(
            "{{{}}}",
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    let mut t = String::new();
    writeln!(t, "n = {}, crossings = {}", r.n, r.total_crossings).unwrap();
    writeln!(t, "gamma = {:?}", r.gamma).unwrap();
    writeln!(t, "U0 = {}, U1 = {}", set(&r.u0), set(&r.u1)).unwrap();
    writeln!(
        t,
        "3|U0| + |U1| = {} >= n: {}",
        3 * r.u0.len() + r.u1.len(),
        r.definitions.cover_bound
    )
    .unwrap();
    for c in &r.claim2 {
        writeln!(
            t,
            "claim 2, U = {}: {} >= {} {}{}",
            set(&c.u),
            c.lhs,
            c.size,
            if c.pass { "pass" } else { "FAIL" },
            if c.precondition {
                ""
            } else {
                " (precondition not met)"
            }
        )
        .unwrap();
    }
    for c in r.claim3.iter().filter(|c| c.applicable) {
        writeln!(
            t,
            "claim 3, i = {}: cr(L{}, L{}) = {} >= 4 {}",
            c.i,
            c.neighbors[0],
            c.neighbors[1],
            c.count,
            if c.pass == Some(true) { "pass" } else { "FAIL" }
        )
        .unwrap();
    }
    match (&r.case, &r.chain) {
        (AuditCase::ContractionCase { sections }, _) => writeln!(
            t,
            "sections {} have gamma = 1: contraction case, chain not applicable",
            set(sections)
        )
        .unwrap(),
        (AuditCase::Chain, Some(c)) => writeln!(
            t,
            "chain: {} >= {} + {} >= {} >= {}: {}",
            c.total,
            c.claim2_part,
            c.claim3_part,
            c.bound,
            c.n,
            if c.holds() { "holds" } else { "FAILS" }
        )
        .unwrap(),
        (AuditCase::Chain, None) => {}
    }
    writeln!(t, "crossings >= n: {}", r.lower_bound).unwrap();
    writeln!(t, "verdict: {}", if r.pass { "pass" } else { "FAIL" }).unwrap();
    t
}

fn audit(d: &Drawing) -> Result<Outcome, String> {
    match audit_chain(d) {
        Ok(r) => Ok(Outcome {
            code: if r.pass { exit::OK } else { exit::FAILED },
            text: audit_text(&r),
            json: serde_json::to_value(&r).expect("report json"),
        }),
        Err(AuditError::NotGood(msg)) => Ok(Outcome {
            code: exit::FAILED,
            text: format!("refused: drawing is not good: {msg}\n"),
            json: json!({ "refused": "not good", "diagnostics": msg }),
        }),
        Err(AuditError::Drawing(e)) => Ok(Outcome {
            code: exit::FAILED,
            text: format!("refused: {e}\n"),
            json: json!({ "refused": e.to_string() }),
        }),
        Err(e) => Err(e.to_string()),
    }
}
