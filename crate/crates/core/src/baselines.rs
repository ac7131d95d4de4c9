//! Reference algorithms: Empty, Random, Degree and greedy.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::centrality::{worth_parallel, Bfs, Instance};
use crate::digraph::EdgeSubset;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A removal budget, either absolute or a fraction of the target's in-degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Budget {
    Absolute(usize),
    /// `⌊fraction · |ρ(v)|⌋`.
    Fraction(f64),
}

impl Budget {
    pub fn fraction(f: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&f) {
            return Err(Error::contract(format!("budget fraction {f} outside [0, 1]")));
        }
        Ok(Budget::Fraction(f))
    }

    /// The concrete budget for a target of the given in-degree, clamped to it.
    pub fn resolve(self, in_degree: usize) -> usize {
        match self {
            Budget::Absolute(b) => clamp_budget(b, in_degree),
            Budget::Fraction(f) => ((f * in_degree as f64).floor() as usize).min(in_degree),
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Absolute(b) => write!(f, "{b}"),
            Budget::Fraction(x) => write!(f, "{x}|ρ(v)|"),
        }
    }
}

/// Clamps `b` to `|ρ(v)|`, warning when the request was larger.
pub fn clamp_budget(b: usize, in_degree: usize) -> usize {
    if b > in_degree {
        log::warn!("budget {b} exceeds in-degree {in_degree}; clamping");
        in_degree
    } else {
        b
    }
}

pub fn empty_baseline(inst: &Instance<'_>, _b: usize) -> EdgeSubset {
    EdgeSubset::empty(inst.graph(), inst.target())
}

/// Uniform `b`-subset of `ρ(v)`, reproducible from `seed`.
pub fn random_baseline(inst: &Instance<'_>, b: usize, seed: u64) -> EdgeSubset {
    let m = inst.in_degree();
    let b = clamp_budget(b, m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, m, b);
    EdgeSubset::from_positions(inst.graph(), inst.target(), picked)
        .expect("sampled positions lie in the in-list")
}

/// The `b` in-neighbors of largest in-degree in `G`; ties go to the lower id.
pub fn degree_baseline(inst: &Instance<'_>, b: usize) -> EdgeSubset {
    let g = inst.graph();
    let b = clamp_budget(b, inst.in_degree());
    let preds = g.predecessors_raw(inst.target());
    let mut order: Vec<usize> = (0..preds.len()).collect();
    // in-list is sorted by id, so a stable sort keeps ties in id order
    order.sort_by_key(|&p| std::cmp::Reverse(g.in_degree(preds[p].into())));
    EdgeSubset::from_positions(g, inst.target(), order.into_iter().take(b))
        .expect("positions lie in the in-list")
}

/// Greedy removal: `b` rounds, each removing the remaining in-edge whose
/// removal yields the smallest objective. Ties go to the lower predecessor
/// id. Every candidate is re-evaluated in every round; lazy evaluation is
/// not valid for this objective.
pub fn greedy<T: Scalar>(inst: &Instance<'_>, b: usize) -> EdgeSubset {
    greedy_with_values::<T>(inst, b).0
}

/// Greedy plus the objective value after each round.
pub fn greedy_with_values<T: Scalar>(inst: &Instance<'_>, b: usize) -> (EdgeSubset, Vec<T>) {
    let g = inst.graph();
    let m = inst.in_degree();
    let b = clamp_budget(b, m);
    let mut chosen = EdgeSubset::empty(g, inst.target());
    let mut values = Vec::with_capacity(b);
    let parallel = worth_parallel(m, g);
    let mut bfs = inst.bfs();

    for _ in 0..b {
        let base = chosen.mask().to_vec();
        let eval = |bfs: &mut Bfs, p: usize| -> (usize, T) {
            let mut mask = base.clone();
            mask[p] = true;
            (p, inst.objective_mask(bfs, &mask))
        };
        let candidates: Vec<usize> = (0..m).filter(|&p| !chosen.contains_position(p)).collect();
        let scored: Vec<(usize, T)> = if parallel {
            candidates
                .par_iter()
                .map_init(|| inst.bfs(), |bfs, &p| eval(bfs, p))
                .collect()
        } else {
            candidates.iter().map(|&p| eval(&mut bfs, p)).collect()
        };
        let (best, value) = scored
            .into_iter()
            .reduce(|acc, c| if c.1 < acc.1 { c } else { acc })
            .expect("budget never exceeds the number of candidates");
        chosen.insert_position(best);
        values.push(value);
    }
    (chosen, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{DiGraph, VertexId};

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn star() -> DiGraph {
        DiGraph::from_edges(4, [(1, 0), (2, 0), (3, 0)])
    }

    #[test]
    fn empty_is_upper_bound() {
        let g = DiGraph::from_edges(3, [(0, 1), (1, 2)]);
        let inst = Instance::new(&g, v(2)).unwrap();
        let f = empty_baseline(&inst, 1);
        assert!(f.is_empty());
        assert_eq!(inst.objective::<f64>(&f).unwrap(), 1.5);
    }

    #[test]
    fn random_is_seeded() {
        let g = star();
        let inst = Instance::new(&g, v(0)).unwrap();
        assert_eq!(random_baseline(&inst, 3, 7), EdgeSubset::full(&g, v(0)));
        assert_eq!(random_baseline(&inst, 2, 42), random_baseline(&inst, 2, 42));
        for seed in 0..50 {
            let f = random_baseline(&inst, 2, seed);
            assert_eq!(f.len(), 2);
            assert_eq!(inst.objective::<f64>(&f).unwrap(), 1.0);
        }
    }

    #[test]
    fn degree_ties_prefer_low_ids() {
        // in-neighbors 1..=4 of vertex 0 with in-degrees 5, 3, 3, 1
        let mut edges = vec![(1, 0), (2, 0), (3, 0), (4, 0)];
        let mut next = 5u32;
        for (w, deg) in [(1u32, 5), (2, 3), (3, 3), (4, 1)] {
            for _ in 0..deg {
                edges.push((next, w));
                next += 1;
            }
        }
        let g = DiGraph::from_edges(next as usize, edges);
        let inst = Instance::new(&g, v(0)).unwrap();
        let f = degree_baseline(&inst, 2);
        assert_eq!(f.predecessors(&g), vec![v(1), v(2)]);
        assert_eq!(degree_baseline(&inst, 4), EdgeSubset::full(&g, v(0)));
    }

    #[test]
    fn greedy_trivial_cases() {
        let g = star();
        let inst = Instance::new(&g, v(0)).unwrap();
        let (f, values) = greedy_with_values::<f64>(&inst, 3);
        assert_eq!(f.len(), 3);
        assert_eq!(values, vec![2.0, 1.0, 0.0]);

        let single = DiGraph::from_edges(2, [(1, 0)]);
        let inst = Instance::new(&single, v(0)).unwrap();
        assert_eq!(greedy::<f64>(&inst, 1), EdgeSubset::full(&single, v(0)));
    }

    #[test]
    fn greedy_ties_prefer_low_ids() {
        let g = star();
        let inst = Instance::new(&g, v(0)).unwrap();
        assert_eq!(greedy::<f64>(&inst, 1).predecessors(&g), vec![v(1)]);
    }

    #[test]
    fn budgets_clamp() {
        let g = star();
        let inst = Instance::new(&g, v(0)).unwrap();
        assert_eq!(greedy::<f64>(&inst, 10).len(), 3);
        assert_eq!(degree_baseline(&inst, 10).len(), 3);
        assert_eq!(random_baseline(&inst, 10, 1).len(), 3);
        assert_eq!(Budget::Fraction(0.5).resolve(101), 50);
        assert_eq!(Budget::Absolute(7).resolve(5), 5);
        assert!(Budget::fraction(1.5).is_err());
    }
}
