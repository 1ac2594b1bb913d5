use std::fmt::Write;
use std::time::Instant;

use crosscert::audit::audit_chain;
use crosscert::geometry::int;
use crosscert::graph::{family_gn, gn_edges, make_complete, make_complete_bipartite, Graph};
use crosscert::layout::{
    canonical_drawing_gn, canonical_drawing_mn, deletion_drawing_gn, drawing_hn,
    exchanged_drawing_gn, jittered,
};
use crosscert::solver::{check_critical, compute_cr, Budget, CrOutcome, EdgeSelection};
use crosscert::validator::scan;
use crosscert::{Drawing, GraphError};
use serde::Serialize;
use serde_json::json;

use crate::{exit, Outcome, Scope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Pass,
    Fail,
    Budget,
}

#[derive(Debug, Serialize)]
struct Row {
    pipeline: &'static str,
    name: String,
    expected: String,
    observed: String,
    status: Status,
    secs: f64,
}

struct Table {
    rows: Vec<Row>,
}

impl Table {
    fn push(
        &mut self,
        pipeline: &'static str,
        name: String,
        expected: String,
        start: Instant,
        result: (String, Status),
    ) {
        self.rows.push(Row {
            pipeline,
            name,
            expected,
            observed: result.0,
            status: result.1,
            secs: start.elapsed().as_secs_f64(),
        });
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn graph_or_fail(g: Result<Graph, GraphError>) -> Graph {
    g.expect("reference graph parameters are valid")
}

fn small_exact(t: &mut Table, budget: Budget) {
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("cr(K5)", graph_or_fail(make_complete(5)), 1),
        ("cr(K3,3)", graph_or_fail(make_complete_bipartite(3, 3)), 1),
        ("cr(K6)", graph_or_fail(make_complete(6)), 3),
        ("cr(K4,4)", graph_or_fail(make_complete_bipartite(4, 4)), 4),
        ("cr(G4)", graph_or_fail(family_gn(4)), 4),
    ];
    for (name, g, want) in cases {
        let start = Instant::now();
        let result = match compute_cr(&g, budget, None) {
            CrOutcome::Exact(r) => (r.cr.to_string(), pass_if(r.cr == want)),
            CrOutcome::Bounded { lower, upper, .. } => (
                format!(
                    "{lower}..{}",
                    upper.map(|u| u.to_string()).unwrap_or("?".into())
                ),
                Status::Budget,
            ),
        };
        t.push("small-exact", name.into(), want.to_string(), start, result);
    }
    let start = Instant::now();
    let g = graph_or_fail(family_gn(4));
    let result = match check_critical(&g, 4, &EdgeSelection::All, budget) {
        Ok(r) if r.incomplete => ("inconclusive".into(), Status::Budget),
        Ok(r) => {
            let drops = r.verdicts.iter().filter(|v| v.drops).count();
            (
                format!("{drops}/{} edges drop", r.verdicts.len()),
                pass_if(r.critical),
            )
        }
        Err(e) => (e.to_string(), Status::Fail),
    };
    t.push(
        "small-exact",
        "G4 crossing-critical".into(),
        "16/16 edges drop".into(),
        start,
        result,
    );
}

/// Certified crossing count and goodness, or the construction error.
fn certify(d: Result<Drawing, impl ToString>) -> Result<(usize, bool), String> {
    let d = d.map_err(|e| e.to_string())?;
    let s = scan(&d);
    let good = s.goodness(&d).is_good();
    if !s.defects.is_empty() {
        return Err("degenerate".into());
    }
    Ok((s.records.len(), good))
}

fn drawings(t: &mut Table) {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 4..=50 {
        match certify(canonical_drawing_gn(n)) {
            Ok((c, true)) if c == n => {}
            other => bad.push(format!("n={n}: {other:?}")),
        }
    }
    t.push(
        "drawings",
        "G_n, n = 4..50".into(),
        "n crossings, good".into(),
        start,
        summary(47, &bad),
    );

    let start = Instant::now();
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 4..=12 {
        for e in gn_edges(n) {
            total += 1;
            match certify(deletion_drawing_gn(n, e)) {
                Ok((c, true)) if c < n => {}
                other => bad.push(format!("n={n} - {e}: {other:?}")),
            }
        }
    }
    t.push(
        "drawings",
        "G_n - e, n = 4..12".into(),
        "< n crossings, good".into(),
        start,
        summary(total, &bad),
    );

    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=20 {
        match certify(canonical_drawing_mn(n)) {
            Ok((c, true)) if c == n => {}
            other => bad.push(format!("n={n}: {other:?}")),
        }
    }
    t.push(
        "drawings",
        "M_n, n = 3..20".into(),
        "n crossings, good".into(),
        start,
        summary(18, &bad),
    );

    let start = Instant::now();
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for n in 4..=10 {
        match certify(drawing_hn(n)) {
            Ok((c, true)) if c <= 6 * n => counts.push(format!("{c}")),
            other => bad.push(format!("n={n}: {other:?}")),
        }
    }
    let mut result = summary(7, &bad);
    if bad.is_empty() {
        result.0 = format!("{} ({})", result.0, counts.join(","));
    }
    t.push(
        "drawings",
        "H_n, n = 4..10".into(),
        "<= 6n crossings, good".into(),
        start,
        result,
    );
}

fn summary(total: usize, bad: &[String]) -> (String, Status) {
    if bad.is_empty() {
        (format!("{total}/{total}"), Status::Pass)
    } else {
        (
            format!("{}/{total}; first failure {}", total - bad.len(), bad[0]),
            Status::Fail,
        )
    }
}

fn audits(t: &mut Table, seed: u64, jitter_seeds: u64) {
    let check = |d: Result<Drawing, _>| -> Result<(), String> {
        let d = d.map_err(|e: crosscert::DrawingError| e.to_string())?;
        let r = audit_chain(&d).map_err(|e| e.to_string())?;
        if r.pass {
            Ok(())
        } else {
            Err(format!("audit failed, gamma = {:?}", r.gamma))
        }
    };

    let start = Instant::now();
    let bad: Vec<String> = (4..=12)
        .filter_map(|n| {
            check(canonical_drawing_gn(n))
                .err()
                .map(|e| format!("n={n}: {e}"))
        })
        .collect();
    t.push(
        "audit",
        "canonical G_n, n = 4..12".into(),
        "pass".into(),
        start,
        summary(9, &bad),
    );

    let start = Instant::now();
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 4..=12 {
        for j in 1..=n {
            total += 1;
            if let Err(e) = check(exchanged_drawing_gn(n, &[j])) {
                bad.push(format!("n={n}, j={j}: {e}"));
            }
        }
    }
    t.push(
        "audit",
        "single exchanges, n = 4..12".into(),
        "pass".into(),
        start,
        summary(total, &bad),
    );

    let start = Instant::now();
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 4..=12 {
        let base = canonical_drawing_gn(n).expect("canonical drawing");
        for s in 0..jitter_seeds {
            total += 1;
            let seed = seed.wrapping_add(s);
            if let Err(e) = check(jittered(&base, seed, &int(2000))) {
                bad.push(format!("n={n}, seed={seed}: {e}"));
            }
        }
    }
    t.push(
        "audit",
        format!("jittered G_n x {jitter_seeds}, n = 4..12"),
        "pass".into(),
        start,
        summary(total, &bad),
    );
}

pub fn run(scope: Scope, seed: u64, jitter_seeds: u64, budget: Budget) -> Outcome {
    let mut t = Table { rows: Vec::new() };
    if matches!(scope, Scope::SmallExact | Scope::All) {
        small_exact(&mut t, budget);
    }
    if matches!(scope, Scope::Drawings | Scope::All) {
        drawings(&mut t);
    }
    if matches!(scope, Scope::Audit | Scope::All) {
        audits(&mut t, seed, jitter_seeds);
    }

    let mut text = String::new();
    writeln!(
        text,
        "{:<12} {:<32} {:<24} {:<28} {:>8}  status",
        "pipeline", "check", "expected", "observed", "secs"
    )
    .unwrap();
    for r in &t.rows {
        writeln!(
            text,
            "{:<12} {:<32} {:<24} {:<28} {:>8.2}  {}",
            r.pipeline,
            r.name,
            r.expected,
            r.observed,
            r.secs,
            match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Budget => "BUDGET",
            }
        )
        .unwrap();
    }
    let failed = t.rows.iter().filter(|r| r.status == Status::Fail).count();
    let budget_hit = t.rows.iter().filter(|r| r.status == Status::Budget).count();
    writeln!(
        text,
        "{} checks: {} passed, {failed} failed, {budget_hit} out of budget",
        t.rows.len(),
        t.rows.len() - failed - budget_hit
    )
    .unwrap();
    let code = if failed > 0 {
        exit::FAILED
    } else if budget_hit > 0 {
        exit::BUDGET
    } else {
        exit::OK
    };
    Outcome {
        code,
        text,
        json: json!({ "seed": seed, "rows": t.rows }),
    }
}
