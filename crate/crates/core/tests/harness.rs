mod common;

use common::strategies::graph_with_indegree;
use hcmin::baselines::greedy;
use hcmin::harness::{
    alg1_adversarial, brute_force_opt, for_each_combination, greedy_adversarial, kunion, read_results_csv,
    run_experiment, write_results_csv, Algorithm, BruteForceOptions, ExperimentConfig, KUnionInstance,
};
use hcmin::scalable::top_b_cut;
use hcmin::{EdgeSubset, Instance};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brute_force_beats_everything((g, v) in graph_with_indegree(14, 1), b in 0usize..10) {
        let inst = Instance::new(&g, v).unwrap();
        let exact = brute_force_opt(&inst, b, BruteForceOptions::default()).unwrap();
        let any_size = brute_force_opt(&inst, b, BruteForceOptions { all_sizes: true, ..Default::default() }).unwrap();
        prop_assert_eq!(exact.value, any_size.value);
        prop_assert_eq!(exact.subset.len(), b.min(inst.in_degree()));
        for f in [greedy::<f64>(&inst, b), top_b_cut::<f64>(&inst, b)] {
            prop_assert!(exact.value <= inst.objective::<f64>(&f).unwrap() + 1e-12);
        }
    }

    #[test]
    fn reduction_identity(
        sets in proptest::collection::vec(proptest::collection::vec(0usize..6, 0..5), 2..=12),
        k_pick in any::<prop::sample::Index>(),
    ) {
        let n = 6;
        let mut sets = sets;
        sets[0].extend(0..n);
        let m = sets.len();
        let k = 1 + k_pick.index(m);
        let ku = KUnionInstance::new(n, sets, k).unwrap();
        let g = kunion(&ku);
        prop_assert!(g.graph.is_acyclic());
        let inst = g.instance();
        let b = g.budget;
        let mut ok = true;
        for_each_combination(m, b, |removed| {
            let kept: Vec<usize> = (0..m).filter(|j| !removed.contains(j)).collect();
            let f = EdgeSubset::from_positions(&g.graph, g.target, removed.iter().copied()).unwrap();
            let want = (m - b) as f64 + 0.5 * ku.union_size(&kept) as f64;
            ok &= inst.objective::<f64>(&f).unwrap() == want;
        });
        prop_assert!(ok);
    }
}

#[test]
fn gadgets_are_simple_dags() {
    for k in 2..=6 {
        for g in [greedy_adversarial(k).unwrap(), alg1_adversarial(k).unwrap()] {
            assert!(g.graph.is_acyclic());
            let edges: Vec<_> = g.graph.edges().collect();
            assert!(edges.iter().all(|(u, w)| u != w));
            assert!(edges.windows(2).all(|w| w[0] < w[1]));
            let groups: usize = g.group_names().map(|n| g.group(n).len()).sum();
            assert_eq!(groups, g.graph.vertex_count());
        }
    }
}

#[test]
fn experiment_round_trip() {
    let g = hcmin::harness::preferential_attachment(400, 3, 5);
    let targets = hcmin::harness::select_targets(&g, 20, 4, 1);
    assert!(!targets.is_empty());
    let mut cfg = ExperimentConfig::new("pa");
    cfg.algorithms = ["empty", "random", "degree", "greedy", "topb", "bicriteria:0.5"]
        .iter()
        .map(|a| a.parse::<Algorithm>().unwrap())
        .collect();
    cfg.random_repeats = 3;
    cfg.rounding_draws = 3;
    cfg.psm_iters = 20;
    let records = run_experiment(&g, None, &targets, &cfg);
    assert_eq!(records.len(), targets.len() * 3 * 6);
    for r in &records {
        assert!(r.error.is_none());
        assert!(r.objective >= r.in_degree as f64 - r.solution_size - 1e-9);
        assert!(r.objective.is_finite());
        if r.algorithm == "empty" {
            let inst = Instance::new(&g, hcmin::VertexId(r.target as u32)).unwrap();
            assert_eq!(r.objective, inst.initial_value::<f64>());
        }
    }
    let mut buf = Vec::new();
    write_results_csv(&records, &mut buf).unwrap();
    let back = read_results_csv(buf.as_slice()).unwrap();
    assert_eq!(back.len(), records.len());
    for (a, b) in back.iter().zip(&records) {
        assert_eq!((a.target, a.budget, &a.algorithm), (b.target, b.budget, &b.algorithm));
        assert_eq!(a.objective, b.objective);
    }
}

#[test]
fn stress_gadget_through_the_runner() {
    let g = alg1_adversarial(50).unwrap();
    let mut cfg = ExperimentConfig::new("alg1-50");
    cfg.algorithms = vec![Algorithm::TopB, Algorithm::Bicriteria { alpha: 0.75 }];
    cfg.budget_fracs = vec![0.5];
    let records = run_experiment(&g.graph, None, &[g.target], &cfg);
    assert_eq!(records.len(), 2);
    let by = |name: &str| records.iter().find(|r| r.algorithm == name).unwrap();
    assert_eq!(by("topb").budget, 50);
    assert_eq!(by("topb").objective, 1275.0);
    assert!((by("bicriteria:0.75").objective - 75.0).abs() < 1e-9);
}
