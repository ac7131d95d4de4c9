//! Seeded random digraphs for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::DiGraph;

/// Each ordered pair `(u, w)`, `u ≠ w`, is an edge with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> DiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for w in 0..n as u32 {
            if u != w && rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    DiGraph::from_edges(n, edges)
}

/// Directed preferential attachment.
///
/// Starts from a complete digraph on `out_degree + 1` vertices; every later
/// vertex links to `out_degree` distinct earlier vertices chosen with
/// probability proportional to `in-degree + 1`. Produces about
/// `n · out_degree` edges and a heavy-tailed in-degree distribution.
pub fn preferential_attachment(n: usize, out_degree: usize, seed: u64) -> DiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = (out_degree + 1).min(n);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n * out_degree);
    // one entry per vertex plus one per received edge
    let mut pool: Vec<u32> = Vec::with_capacity(n * (out_degree + 1));
    for u in 0..core as u32 {
        pool.push(u);
        for w in 0..core as u32 {
            if u != w {
                edges.push((u, w));
            }
        }
    }
    for w in 0..core as u32 {
        pool.extend(std::iter::repeat_n(w, core - 1));
    }
    let mut picked: Vec<u32> = Vec::with_capacity(out_degree);
    for u in core as u32..n as u32 {
        picked.clear();
        while picked.len() < out_degree {
            let w = pool[rng.gen_range(0..pool.len())];
            if !picked.contains(&w) {
                picked.push(w);
            }
        }
        for &w in &picked {
            edges.push((u, w));
            pool.push(w);
        }
        pool.push(u);
    }
    DiGraph::from_edges(n, edges)
}
