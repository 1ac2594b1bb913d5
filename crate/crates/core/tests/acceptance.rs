//! Acceptance suite: one line per criterion, nonzero exit if any blocking
//! criterion fails. The exact `G_5` solve is reported but never blocks;
//! set `CROSSCERT_SKIP_STRETCH=1` to skip it.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{adjacency, all_pairs, has_kuratowski_subdivision};
use crosscert::audit::{audit_chain, AuditCase};
use crosscert::geometry::int;
use crosscert::graph::*;
use crosscert::layout::*;
use crosscert::planarity::is_planar_simple;
use crosscert::solver::*;
use crosscert::validator::{check_good, count_crossings};
use crosscert::Drawing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Line {
    id: &'static str,
    pass: bool,
    blocking: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn run(
    id: &'static str,
    limit_secs: u64,
    blocking: bool,
    f: impl FnOnce() -> Result<String, String>,
) -> Line {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let (pass, detail) = match result {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the {limit_secs} s limit")),
        Err(d) => (false, d),
    };
    Line {
        id,
        pass,
        blocking,
        detail,
        elapsed,
        limit,
    }
}

fn exact(g: &Graph, budget: Budget) -> Result<usize, String> {
    match compute_cr(g, budget, None) {
        CrOutcome::Exact(r) => Ok(r.cr),
        CrOutcome::Bounded { lower, upper, .. } => {
            Err(format!("budget exhausted, {lower} <= cr <= {upper:?}"))
        }
    }
}

fn guy(n: usize) -> usize {
    (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4
}

fn zarankiewicz(m: usize, n: usize) -> usize {
    (m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2)
}

fn small_values() -> Result<String, String> {
    let budget = Budget::seconds(60);
    let cases = [
        ("K5", make_complete(5).unwrap(), guy(5)),
        ("K6", make_complete(6).unwrap(), guy(6)),
        (
            "K3,3",
            make_complete_bipartite(3, 3).unwrap(),
            zarankiewicz(3, 3),
        ),
        (
            "K4,4",
            make_complete_bipartite(4, 4).unwrap(),
            zarankiewicz(4, 4),
        ),
        ("G4", family_gn(4).unwrap(), 4),
    ];
    let mut got = Vec::new();
    for (name, g, want) in cases {
        let cr = exact(&g, budget)?;
        if cr != want {
            return Err(format!("cr({name}) = {cr}, expected {want}"));
        }
        got.push(format!("cr({name})={cr}"));
    }
    Ok(got.join(" "))
}

fn g4_critical() -> Result<String, String> {
    let g = family_gn(4).unwrap();
    let mut nodes = 0;
    for e in 0..g.edge_count() {
        let h = g.without_edge(e);
        let r = decide_cr_le_k(&h, 3, Budget::seconds(300)).map_err(|e| e.to_string())?;
        nodes += r.nodes;
        let plan = r
            .decision
            .plan()
            .ok_or_else(|| format!("G4 - {}: {:?}", g.edge_key(e), r.decision))?;
        plan.validate(&h)?;
        if !plan.planarization(&h).is_planar() || plan.len() > 3 {
            return Err(format!("G4 - {}: unsound plan", g.edge_key(e)));
        }
    }
    Ok(format!("16/16 edges: cr(G4 - e) <= 3 ({nodes} nodes)"))
}

fn certified(d: &Drawing) -> Result<usize, String> {
    let report = check_good(d);
    if !report.is_good() {
        return Err(report.diagnostics.join("; "));
    }
    count_crossings(d)
        .map(|c| c.count())
        .map_err(|e| e.to_string())
}

fn gn_drawings() -> Result<String, String> {
    for n in 4..=50 {
        let c = certified(&canonical_drawing_gn(n).map_err(|e| e.to_string())?)?;
        if c != n {
            return Err(format!("G{n}: {c} crossings"));
        }
    }
    let mut deletions = 0;
    for n in 4..=12 {
        for e in gn_edges(n) {
            let d = deletion_drawing_gn(n, e).map_err(|e| e.to_string())?;
            let c = certified(&d)?;
            if c > n - 1 {
                return Err(format!("G{n} - {e}: {c} crossings"));
            }
            deletions += 1;
        }
    }
    Ok(format!(
        "G_n: n crossings for n = 4..50; {deletions} deletion drawings <= n - 1"
    ))
}

fn mn_drawings() -> Result<String, String> {
    for n in 3..=20 {
        let d = canonical_drawing_mn(n).map_err(|e| e.to_string())?;
        let c = certified(&d)?;
        if c != n {
            return Err(format!("M{n}: {c} crossings"));
        }
        if n == 12 && d.graph().edge_count() != 60 {
            return Err("M12 must have 60 edges".into());
        }
    }
    Ok("M_n: n crossings for n = 3..20 (M12: 12)".into())
}

fn hn_drawings() -> Result<String, String> {
    let mut counts = Vec::new();
    for n in 4..=10 {
        let c = certified(&drawing_hn(n).map_err(|e| e.to_string())?)?;
        if c > 6 * n {
            return Err(format!("H{n}: {c} > {}", 6 * n));
        }
        counts.push(format!("H{n}={c}"));
    }
    Ok(counts.join(" "))
}

/// The drawing of `G_n` a deletion drawing came from: the removed edge put
/// back as a straight segment.
fn restored(n: usize, e: GnEdge) -> Result<Drawing, String> {
    let minus = deletion_drawing_gn(n, e).map_err(|e| e.to_string())?;
    Drawing::straight_line(family_gn(n).unwrap(), minus.positions().to_vec())
        .map_err(|e| e.to_string())
}

#[derive(Default)]
struct AuditStats {
    drawings: usize,
    chain: usize,
    contraction: usize,
    claim3_applied: usize,
    max_crossings_over_n: f64,
}

fn audit_suite() -> Result<String, String> {
    let mut stats = AuditStats::default();
    let mut audit = |label: &str, d: &Drawing| -> Result<(), String> {
        let n = d.graph().vertex_count() / 2;
        let r = audit_chain(d).map_err(|e| format!("{label}: {e}"))?;
        if !r.pass || !r.definitions.hold() || r.total_crossings < n {
            return Err(format!("{label}: audit failed: {r:?}"));
        }
        stats.drawings += 1;
        match r.case {
            AuditCase::Chain => stats.chain += 1,
            AuditCase::ContractionCase { .. } => stats.contraction += 1,
        }
        stats.claim3_applied += r.claim3.iter().filter(|c| c.applicable).count();
        stats.max_crossings_over_n = stats
            .max_crossings_over_n
            .max(r.total_crossings as f64 / n as f64);
        Ok(())
    };
    for n in 4..=12 {
        let base = canonical_drawing_gn(n).map_err(|e| e.to_string())?;
        audit(&format!("G{n}"), &base)?;
        for e in gn_edges(n) {
            audit(&format!("G{n} restored {e}"), &restored(n, e)?)?;
        }
        for seed in 0..100 {
            let d = jittered(&base, seed, &int(2000)).map_err(|e| e.to_string())?;
            audit(&format!("G{n} jitter {seed}"), &d)?;
        }
    }
    Ok(format!(
        "{} drawings: {} chain, {} contraction case, {} Claim 3 checks, max cr/n = {:.2}",
        stats.drawings,
        stats.chain,
        stats.contraction,
        stats.claim3_applied,
        stats.max_crossings_over_n
    ))
}

fn planarity_oracle() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=6 {
        let pairs = all_pairs(n);
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            if is_planar_simple(n, &edges) == has_kuratowski_subdivision(n, &adjacency(n, &edges)) {
                return Err(format!("disagreement on n = {n}, {edges:?}"));
            }
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pairs = all_pairs(7);
    for _ in 0..500 {
        let p: f64 = rng.gen_range(0.3..0.8);
        let edges: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        if is_planar_simple(7, &edges) == has_kuratowski_subdivision(7, &adjacency(7, &edges)) {
            return Err(format!("disagreement on n = 7, {edges:?}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs agree"))
}

fn g5_stretch() -> Result<String, String> {
    let g = family_gn(5).unwrap();
    let deadline = Instant::now() + Duration::from_secs(1800);
    let remaining = || Budget {
        max_nodes: None,
        max_time: Some(deadline.saturating_duration_since(Instant::now())),
    };
    // Upper bound from the certified canonical drawing.
    let upper = certified(&canonical_drawing_gn(5).unwrap())?;
    let below = decide_cr_le_k(&g, 4, remaining()).map_err(|e| e.to_string())?;
    match below.decision {
        Decision::Infeasible => {}
        Decision::OutOfBudget => {
            return Err(format!(
                "budget exhausted: cr(G5) <= {upper}, k = 4 undecided after {} nodes",
                below.nodes
            ))
        }
        Decision::Feasible { .. } => return Err("found a plan with 4 crossings".into()),
    }
    let at = decide_cr_le_k(&g, 5, remaining()).map_err(|e| e.to_string())?;
    match at.decision {
        Decision::Feasible { plan } if plan.len() == 5 => {
            Ok(format!("cr(G5) = 5 ({} + {} nodes)", below.nodes, at.nodes))
        }
        Decision::Feasible { plan } => Err(format!("plan with {} crossings", plan.len())),
        _ => Err(format!(
            "4 < cr(G5) <= {upper}, k = 5 plan not found in budget"
        )),
    }
}

fn main() -> ExitCode {
    let skip_stretch = std::env::var_os("CROSSCERT_SKIP_STRETCH").is_some();
    type Criterion = (&'static str, u64, bool, fn() -> Result<String, String>);
    let criteria: [Criterion; 8] = [
        ("1 exact small values", 60, true, small_values),
        ("2 G4 crossing-critical", 300, true, g4_critical),
        ("3 G_n upper-bound drawings", 60, true, gn_drawings),
        ("4 M_n drawings", 60, true, mn_drawings),
        ("5 H_n drawings <= 6n", 60, true, hn_drawings),
        ("6 audit suite", 120, true, audit_suite),
        ("7 planarity oracle", 300, true, planarity_oracle),
        ("8 cr(G5) = 5 (stretch)", 1800, false, g5_stretch),
    ];
    let mut failed = 0;
    for (id, limit, blocking, f) in criteria {
        if !blocking && skip_stretch {
            println!("SKIP  {id}");
            continue;
        }
        let line = run(id, limit, blocking, f);
        println!(
            "{}  {:<28} {:>7.2}s / {:>4}s  {}",
            if line.pass { "PASS" } else { "FAIL" },
            line.id,
            line.elapsed.as_secs_f64(),
            line.limit.as_secs(),
            line.detail
        );
        if !line.pass && line.blocking {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} blocking criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
