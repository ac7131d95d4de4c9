use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::{DiGraph, VertexId};

pub const DEFAULT_MIN_INDEGREE: usize = 100;
pub const DEFAULT_TARGET_COUNT: usize = 20;

/// Samples `count` distinct vertices uniformly among those with in-degree at
/// least `min_indegree`. With fewer qualifying vertices all of them are
/// returned and a warning is logged. Output is sorted by id.
pub fn select_targets(graph: &DiGraph, min_indegree: usize, count: usize, seed: u64) -> Vec<VertexId> {
    let eligible: Vec<VertexId> = graph
        .vertices()
        .filter(|&v| graph.in_degree(v) >= min_indegree)
        .collect();
    if eligible.len() <= count {
        if eligible.len() < count {
            log::warn!(
                "only {} vertices have in-degree >= {min_indegree}; wanted {count}",
                eligible.len()
            );
        }
        return eligible;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<VertexId> = rand::seq::index::sample(&mut rng, eligible.len(), count)
        .into_iter()
        .map(|i| eligible[i])
        .collect();
    picked.sort_unstable();
    picked
}
