//! Exhaustive optimum for small instances.

use crate::centrality::Instance;
use crate::digraph::EdgeSubset;
use crate::error::{Error, Result};

pub const DEFAULT_WORK_CAP: f64 = 1e8;

/// Calls `visit` with every `k`-subset of `{0, …, n-1}` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        visit(&c);
        // rightmost slot that can still advance
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
            return;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// `C(n, k)` as a float, to compare against work caps without overflow.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BruteForceOptions {
    /// Refuse when `#subsets · (|V| + |A|)` exceeds this.
    pub work_cap: f64,
    /// Enumerate every size `0..=b` instead of exactly `b`.
    pub all_sizes: bool,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            work_cap: DEFAULT_WORK_CAP,
            all_sizes: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult {
    pub subset: EdgeSubset,
    pub value: f64,
    pub evaluated: usize,
}

/// Minimum of the objective over subsets of `ρ(v)` of size `b` (the
/// objective is non-increasing, so smaller sets never do better). Ties keep
/// the lexicographically first subset of in-list positions.
pub fn brute_force_opt(inst: &Instance<'_>, b: usize, opts: BruteForceOptions) -> Result<BruteForceResult> {
    let g = inst.graph();
    let m = inst.in_degree();
    let b = crate::baselines::clamp_budget(b, m);
    let sizes: Vec<usize> = if opts.all_sizes { (0..=b).collect() } else { vec![b] };
    let subsets: f64 = sizes.iter().map(|&s| binomial(m, s)).sum();
    let work = subsets * (g.vertex_count() + g.edge_count()) as f64;
    if work > opts.work_cap {
        return Err(Error::WorkCapExceeded {
            work,
            cap: opts.work_cap,
        });
    }

    let mut bfs = inst.bfs();
    let mut mask = vec![false; m];
    let mut best: Option<(Vec<usize>, f64)> = None;
    let mut evaluated = 0;
    for s in sizes {
        for_each_combination(m, s, |c| {
            c.iter().for_each(|&p| mask[p] = true);
            let value: f64 = inst.objective_mask(&mut bfs, &mask);
            c.iter().for_each(|&p| mask[p] = false);
            evaluated += 1;
            if best.as_ref().is_none_or(|(_, v)| value < *v) {
                best = Some((c.to_vec(), value));
            }
        });
    }
    let (positions, value) = best.expect("at least one subset is enumerated");
    Ok(BruteForceResult {
        subset: EdgeSubset::from_positions(g, inst.target(), positions)?,
        value,
        evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{DiGraph, VertexId};

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut count = 0;
        for_each_combination(5, 0, |c| {
            assert!(c.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| panic!("no 3-subsets of 2 elements"));
        assert_eq!(binomial(16, 8), 12870.0);
        assert_eq!(binomial(5, 0), 1.0);
    }

    #[test]
    fn full_budget_is_zero() {
        let g = DiGraph::from_edges(4, [(1, 0), (2, 0), (3, 1)]);
        let inst = Instance::new(&g, VertexId(0)).unwrap();
        let r = brute_force_opt(&inst, 2, BruteForceOptions::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.subset, EdgeSubset::full(&g, VertexId(0)));
    }

    #[test]
    fn refuses_large_work() {
        let g = DiGraph::from_edges(4, [(1, 0), (2, 0), (3, 0)]);
        let inst = Instance::new(&g, VertexId(0)).unwrap();
        let opts = BruteForceOptions {
            work_cap: 10.0,
            all_sizes: false,
        };
        assert!(matches!(
            brute_force_opt(&inst, 1, opts),
            Err(Error::WorkCapExceeded { .. })
        ));
    }
}
