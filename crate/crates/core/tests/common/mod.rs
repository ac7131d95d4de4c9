#![allow(dead_code)]

use hcmin::harness::erdos_renyi;
use hcmin::{DiGraph, EdgeSubset, Instance, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random digraph together with a target whose in-degree lies in
/// `min_in..=max_in`; the target is the eligible vertex of largest in-degree.
pub struct RandomInstance {
    pub graph: DiGraph,
    pub target: VertexId,
    pub seed: u64,
}

impl RandomInstance {
    pub fn instance(&self) -> Instance<'_> {
        Instance::new(&self.graph, self.target).unwrap()
    }

    pub fn in_degree(&self) -> usize {
        self.graph.in_degree(self.target)
    }
}

/// Draws Erdős–Rényi graphs on `n_range` vertices until one has an eligible
/// target. `p` is drawn from `p_range`.
pub fn random_instance(
    rng: &mut ChaCha8Rng,
    n_range: std::ops::RangeInclusive<usize>,
    p_range: (f64, f64),
    min_in: usize,
    max_in: usize,
) -> RandomInstance {
    loop {
        let n = rng.gen_range(n_range.clone());
        let p = if p_range.0 < p_range.1 {
            rng.gen_range(p_range.0..p_range.1)
        } else {
            p_range.0
        };
        let seed = rng.gen();
        let graph = erdos_renyi(n, p, seed);
        let target = graph
            .vertices()
            .filter(|&v| (min_in..=max_in).contains(&graph.in_degree(v)))
            .max_by_key(|&v| (graph.in_degree(v), std::cmp::Reverse(v)));
        if let Some(target) = target {
            return RandomInstance { graph, target, seed };
        }
    }
}

/// Every subset of `0..m` as a mask, `m ≤ 20`.
pub fn all_masks(m: usize) -> impl Iterator<Item = Vec<bool>> {
    assert!(m <= 20);
    (0u32..1 << m).map(move |bits| (0..m).map(|i| bits >> i & 1 == 1).collect())
}

pub fn subset_of(inst: &Instance<'_>, mask: Vec<bool>) -> EdgeSubset {
    EdgeSubset::from_mask(inst.target(), mask)
}

pub fn random_mask(rng: &mut ChaCha8Rng, m: usize, p: f64) -> Vec<bool> {
    (0..m).map(|_| rng.gen_bool(p)).collect()
}

pub mod strategies {
    use hcmin::{DiGraph, VertexId};
    use proptest::prelude::*;

    /// A small digraph and one of its vertices as the target.
    pub fn graph_and_target(max_n: usize) -> impl Strategy<Value = (DiGraph, VertexId)> {
        (2..=max_n)
            .prop_flat_map(|n| {
                let edges = proptest::collection::vec((0..n as u32, 0..n as u32), 0..=n * 4);
                (Just(n), edges, 0..n as u32)
            })
            .prop_map(|(n, edges, t)| (DiGraph::from_edges(n, edges), VertexId(t)))
    }

    /// Like [`graph_and_target`], with extra in-edges so the target has at
    /// least `min_in` predecessors.
    pub fn graph_with_indegree(max_n: usize, min_in: usize) -> impl Strategy<Value = (DiGraph, VertexId)> {
        (min_in + 1..=max_n.max(min_in + 1))
            .prop_flat_map(|n| {
                let edges = proptest::collection::vec((0..n as u32, 0..n as u32), 0..=n * 3);
                (Just(n), edges)
            })
            .prop_map(move |(n, mut edges)| {
                edges.extend((1..=min_in as u32).map(|u| (u, 0)));
                (DiGraph::from_edges(n, edges), VertexId(0))
            })
    }
}
