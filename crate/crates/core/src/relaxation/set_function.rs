use rayon::prelude::*;

use crate::centrality::{worth_parallel, Instance};
use crate::scalar::Scalar;

/// A set function over the ground set `{0, …, n-1}`, given by membership
/// masks.
pub trait SetFunction<T: Scalar>: Sync {
    fn ground_size(&self) -> usize;

    fn value(&self, members: &[bool]) -> T;

    /// Values on the chain `∅ ⊂ {order[0]} ⊂ {order[0], order[1]} ⊂ …`,
    /// `n + 1` entries.
    fn chain_values(&self, order: &[usize]) -> Vec<T> {
        let mut mask = vec![false; self.ground_size()];
        let mut out = Vec::with_capacity(order.len() + 1);
        out.push(self.value(&mask));
        for &e in order {
            mask[e] = true;
            out.push(self.value(&mask));
        }
        out
    }
}

/// The harmonic objective over `ρ(v)`, indexed by in-list position.
impl<T: Scalar> SetFunction<T> for Instance<'_> {
    fn ground_size(&self) -> usize {
        self.in_degree()
    }

    fn value(&self, members: &[bool]) -> T {
        self.objective_mask(&mut self.bfs(), members)
    }

    fn chain_values(&self, order: &[usize]) -> Vec<T> {
        let m = self.in_degree();
        debug_assert_eq!(order.len(), m);
        if worth_parallel(m + 1, self.graph()) {
            (0..=m)
                .into_par_iter()
                .map_init(
                    || (self.bfs(), vec![false; m]),
                    |(bfs, mask), i| {
                        mask.iter_mut().for_each(|b| *b = false);
                        for &e in &order[..i] {
                            mask[e] = true;
                        }
                        self.objective_mask(bfs, mask)
                    },
                )
                .collect()
        } else {
            let mut bfs = self.bfs();
            let mut mask = vec![false; m];
            let mut out = Vec::with_capacity(m + 1);
            out.push(self.objective_mask(&mut bfs, &mask));
            for &e in order {
                mask[e] = true;
                out.push(self.objective_mask(&mut bfs, &mask));
            }
            out
        }
    }
}
