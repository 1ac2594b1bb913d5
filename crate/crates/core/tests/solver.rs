mod common;

use common::all_pairs;
use crosscert::graph::*;
use crosscert::planarity::is_planar;
use crosscert::solver::*;
use crosscert::{Graph, SolverError};
use proptest::prelude::*;

fn exact_cr(g: &Graph) -> CrResult {
    compute_cr(g, Budget::seconds(120), None)
        .exact()
        .cloned()
        .expect("small instance finishes")
}

fn assert_sound(g: &Graph, plan: &CrossingPlan) {
    plan.validate(g).unwrap();
    let p = plan.planarization(g);
    assert_eq!(p.dummy_count(), plan.len());
    assert!(p.is_planar());
}

fn zarankiewicz(m: usize, n: usize) -> usize {
    (m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2)
}

fn guy(n: usize) -> usize {
    (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4
}

#[test]
fn complete_bipartite_values() {
    for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 4), (3, 5)] {
        let g = make_complete_bipartite(m, n).unwrap();
        let r = exact_cr(&g);
        assert_eq!(r.cr, zarankiewicz(m, n), "K{m},{n}");
        assert_eq!(r.witness_plan.len(), r.cr);
        assert_sound(&g, &r.witness_plan);
    }
}

#[test]
fn complete_values() {
    for n in 3..=6 {
        let g = make_complete(n).unwrap();
        let r = exact_cr(&g);
        assert_eq!(r.cr, guy(n), "K{n}");
        assert_sound(&g, &r.witness_plan);
    }
}

#[test]
fn g4_equals_k44() {
    let r = exact_cr(&family_gn(4).unwrap());
    assert_eq!(r.cr, 4);
    assert_eq!(r.cr, zarankiewicz(4, 4));
    assert!(matches!(r.lower_bound, LowerBound::Exhausted { k: 3, .. }));
}

#[test]
fn petersen_and_small_families() {
    assert_eq!(exact_cr(&make_petersen()).cr, 2);
    assert_eq!(exact_cr(&family_gn(3).unwrap()).cr, 0);
    assert_eq!(exact_cr(&family_mn(3).unwrap()).cr, 3);
    assert_eq!(exact_cr(&make_cycle(9).unwrap()).cr, 0);
}

#[test]
fn deleting_an_edge_never_helps() {
    let graphs = [
        make_complete(5).unwrap(),
        make_complete_bipartite(3, 3).unwrap(),
        family_gn(4).unwrap(),
    ];
    for g in graphs {
        let cr = exact_cr(&g).cr;
        for e in 0..g.edge_count() {
            let h = g.without_edge(e);
            assert!(exact_cr(&h).cr <= cr, "{}", g.edge_key(e));
        }
    }
}

#[test]
fn g4_is_crossing_critical() {
    let g = family_gn(4).unwrap();
    let report = check_critical(&g, 4, &EdgeSelection::All, Budget::seconds(300)).unwrap();
    assert!(report.critical && !report.incomplete);
    assert_eq!(report.verdicts.len(), 16);
    for v in &report.verdicts {
        assert!(v.drops, "{}", v.edge);
        let e = g.find_edge_by_labels(
            v.edge.split("--").next().unwrap(),
            v.edge.split("--").nth(1).unwrap(),
        );
        let h = g.without_edge(e.unwrap());
        assert_sound(&h, v.decision.plan().unwrap());
    }
}

#[test]
fn k5_is_critical_but_k5_plus_pendant_is_not() {
    let k5 = make_complete(5).unwrap();
    assert!(
        check_critical(&k5, 1, &EdgeSelection::All, Budget::unlimited())
            .unwrap()
            .critical
    );
    let pendant = k5.with_pendant("0", "p").unwrap();
    let r = check_critical(&pendant, 1, &EdgeSelection::All, Budget::unlimited()).unwrap();
    assert!(!r.critical);
}

#[test]
fn criticality_needs_a_nonplanar_graph() {
    let g = family_gn(3).unwrap();
    assert_eq!(
        check_critical(&g, 0, &EdgeSelection::All, Budget::unlimited()).unwrap_err(),
        SolverError::PlanarCriticality
    );
}

#[test]
fn decide_is_monotone_in_k() {
    let g = make_complete(6).unwrap();
    for k in 0..=5 {
        let r = decide_cr_le_k(&g, k, Budget::unlimited()).unwrap();
        match r.decision {
            Decision::Feasible { plan } => {
                assert!(k >= 3);
                assert!(plan.len() <= k as usize);
                assert_sound(&g, &plan);
            }
            Decision::Infeasible => assert!(k < 3),
            Decision::OutOfBudget => panic!("no budget set"),
        }
    }
    assert!(decide_cr_le_k(&g, -1, Budget::unlimited()).is_err());
}

#[test]
fn tiny_budgets_report_bounds() {
    let g = family_gn(4).unwrap();
    match compute_cr(&g, Budget::nodes(10), None) {
        CrOutcome::Bounded { lower, .. } => assert!(lower <= 4),
        CrOutcome::Exact(r) => panic!("10 nodes cannot settle G4, got {}", r.cr),
    }
}

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String)> = all_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .map(|(u, v)| (labels[u].clone(), labels[v].clone()))
        .collect();
    Graph::new(labels, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn plans_are_sound(n in 5usize..8, p in 0.3f64..0.8, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let r = compute_cr(&g, Budget::seconds(30), None);
        let r = r.exact().expect("tiny graph");
        prop_assert_eq!(r.cr == 0, is_planar(&g));
        prop_assert_eq!(r.witness_plan.len(), r.cr);
        prop_assert!(r.cr >= euler_lower_bound(&g));
        r.witness_plan.validate(&g).map_err(TestCaseError::fail)?;
        prop_assert!(r.witness_plan.planarization(&g).is_planar());
        if r.cr > 0 {
            let below = decide_cr_le_k(&g, r.cr as i64 - 1, Budget::unlimited()).unwrap();
            prop_assert_eq!(below.decision, Decision::Infeasible);
        }
    }
}
