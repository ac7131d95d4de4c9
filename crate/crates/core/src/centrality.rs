//! Distances to a vertex and harmonic centrality.
//!
//! `h_G(v) = Σ_{u ≠ v} 1 / d(u, v)` needs distances *to* `v`, so everything
//! here runs breadth-first search over reverse edges starting at `v`.
//! Reciprocals are summed layer by layer in ascending distance order.

use rayon::prelude::*;

use crate::digraph::{DiGraph, EdgeSubset, GraphView, VertexId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Marker for "not reachable".
pub const UNREACHABLE: u32 = u32::MAX;

/// Below this much work (in-degree × graph size) batched evaluations stay on
/// the calling thread.
const PARALLEL_WORK: usize = 1 << 15;

pub(crate) fn worth_parallel(tasks: usize, graph: &DiGraph) -> bool {
    tasks > 1 && tasks.saturating_mul(graph.vertex_count() + graph.edge_count()) >= PARALLEL_WORK
}

/// Shortest-path distances `d(u, v)` from every `u` to a fixed `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    dist: Vec<u32>,
}

impl DistanceVector {
    #[inline]
    pub fn get(&self, u: VertexId) -> Option<u32> {
        let d = self.dist[u.index()];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn is_reachable(&self, u: VertexId) -> bool {
        self.dist[u.index()] != UNREACHABLE
    }

    /// Raw distances with [`UNREACHABLE`] for missing paths.
    pub fn as_slice(&self) -> &[u32] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

/// Reusable reverse-BFS scratch space. Only the vertices touched by the
/// previous run are reset, so repeated runs on large graphs with small
/// reachable sets stay cheap.
#[derive(Debug, Clone)]
pub struct Bfs {
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl Bfs {
    pub fn new(vertex_count: usize) -> Self {
        Bfs {
            dist: vec![UNREACHABLE; vertex_count],
            queue: Vec::new(),
        }
    }

    fn run(&mut self, view: &GraphView<'_>, source: VertexId) {
        let n = view.vertex_count();
        if self.dist.len() != n {
            self.dist = vec![UNREACHABLE; n];
            self.queue.clear();
        }
        let Bfs { dist, queue } = self;
        for &u in queue.iter() {
            dist[u as usize] = UNREACHABLE;
        }
        queue.clear();

        dist[source.index()] = 0;
        queue.push(source.0);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let next = dist[u as usize] + 1;
            view.for_each_predecessor(VertexId(u), |w| {
                let slot = &mut dist[w as usize];
                if *slot == UNREACHABLE {
                    *slot = next;
                    queue.push(w);
                }
            });
        }
    }

    /// Harmonic centrality of `v` on `view`.
    pub fn harmonic<T: Scalar>(&mut self, view: &GraphView<'_>, v: VertexId) -> T {
        self.run(view, v);
        let mut total = T::zero();
        let mut layer = 0u32;
        let mut count = 0usize;
        // queue is in BFS order, i.e. non-decreasing distance; skip v itself
        for &u in &self.queue[1..] {
            let d = self.dist[u as usize];
            if d != layer {
                if count > 0 {
                    total += T::from_count(count) / T::from_count(layer as usize);
                }
                layer = d;
                count = 0;
            }
            count += 1;
        }
        if count > 0 {
            total += T::from_count(count) / T::from_count(layer as usize);
        }
        total
    }

    pub fn distances(&mut self, view: &GraphView<'_>, v: VertexId) -> DistanceVector {
        self.run(view, v);
        DistanceVector {
            dist: self.dist.clone(),
        }
    }

    /// Number of vertices (including `v`) that reach `v` in the last run.
    pub fn reached(&self) -> usize {
        self.queue.len()
    }
}

/// Exact unweighted distances from every vertex to `v` on `view`.
pub fn distances_to(view: &GraphView<'_>, v: VertexId) -> DistanceVector {
    Bfs::new(view.vertex_count()).distances(view, v)
}

/// `h(v)` on `view`, with `1/∞ = 0`.
pub fn harmonic<T: Scalar>(view: &GraphView<'_>, v: VertexId) -> T {
    Bfs::new(view.vertex_count()).harmonic(view, v)
}

/// A problem instance: a graph and the target vertex whose in-edges may be
/// removed. All objective evaluations go through this type.
#[derive(Debug, Clone, Copy)]
pub struct Instance<'g> {
    graph: &'g DiGraph,
    target: VertexId,
}

impl<'g> Instance<'g> {
    pub fn new(graph: &'g DiGraph, target: VertexId) -> Result<Self> {
        if !graph.contains(target) {
            return Err(Error::contract(format!(
                "target {target} outside graph of {} vertices",
                graph.vertex_count()
            )));
        }
        Ok(Instance { graph, target })
    }

    #[inline]
    pub fn graph(&self) -> &'g DiGraph {
        self.graph
    }

    #[inline]
    pub fn target(&self) -> VertexId {
        self.target
    }

    /// `|ρ(v)|`.
    #[inline]
    pub fn in_degree(&self) -> usize {
        self.graph.in_degree(self.target)
    }

    pub fn in_neighbors(&self) -> Vec<VertexId> {
        self.graph.in_neighbors(self.target)
    }

    pub fn bfs(&self) -> Bfs {
        Bfs::new(self.graph.vertex_count())
    }

    /// `f(F) = h_{G \ F}(v)`.
    pub fn objective<T: Scalar>(&self, removed: &EdgeSubset) -> Result<T> {
        if removed.target() != self.target {
            return Err(Error::contract(format!(
                "edge subset targets {} but instance targets {}",
                removed.target(),
                self.target
            )));
        }
        removed.check_against(self.graph)?;
        Ok(self.objective_mask(&mut self.bfs(), removed.mask()))
    }

    /// Objective for a removal mask over the target's in-list. The mask
    /// length must equal the in-degree.
    pub fn objective_mask<T: Scalar>(&self, bfs: &mut Bfs, mask: &[bool]) -> T {
        assert_eq!(mask.len(), self.in_degree(), "mask length must equal in-degree");
        let view = GraphView::with_mask_unchecked(self.graph, self.target, mask);
        bfs.harmonic(&view, self.target)
    }

    /// `h_G(v)`, the objective of the empty removal.
    pub fn initial_value<T: Scalar>(&self) -> T {
        harmonic(&GraphView::full(self.graph), self.target)
    }

    /// `h_{G \ ρ(v)}(w)` for every in-neighbor `w`, in in-list order.
    pub fn residual_scores<T: Scalar>(&self) -> Vec<(VertexId, T)> {
        let all = vec![true; self.in_degree()];
        let view = GraphView::with_mask_unchecked(self.graph, self.target, &all);
        let preds = self.graph.predecessors_raw(self.target);
        let n = self.graph.vertex_count();
        if worth_parallel(preds.len(), self.graph) {
            preds
                .par_iter()
                .map_init(
                    || Bfs::new(n),
                    |bfs, &w| (VertexId(w), bfs.harmonic(&view, VertexId(w))),
                )
                .collect()
        } else {
            let mut bfs = Bfs::new(n);
            preds
                .iter()
                .map(|&w| (VertexId(w), bfs.harmonic(&view, VertexId(w))))
                .collect()
        }
    }
}

/// `f_{(G,v)}(F)` as a free function.
pub fn objective<T: Scalar>(graph: &DiGraph, v: VertexId, removed: &EdgeSubset) -> Result<T> {
    Instance::new(graph, v)?.objective(removed)
}

/// Residual scores `h_{G \ ρ(v)}(w)` for all `w ∈ N_in(v)`.
pub fn batch_residual_scores<T: Scalar>(graph: &DiGraph, v: VertexId) -> Result<Vec<(VertexId, T)>> {
    Ok(Instance::new(graph, v)?.residual_scores())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::restrict;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn path() -> DiGraph {
        DiGraph::from_edges(3, [(0, 1), (1, 2)])
    }

    #[test]
    fn path_distances_and_score() {
        let g = path();
        let view = GraphView::full(&g);
        let d = distances_to(&view, v(2));
        assert_eq!(d.as_slice(), &[2, 1, 0]);
        let h: f64 = harmonic(&view, v(2));
        assert!((h - 1.5).abs() < 1e-12);
    }

    #[test]
    fn isolated_target() {
        let g = path();
        let d = distances_to(&GraphView::full(&g), v(0));
        assert_eq!(d.get(v(0)), Some(0));
        assert_eq!(d.get(v(1)), None);
        assert_eq!(d.get(v(2)), None);
        assert_eq!(harmonic::<f64>(&GraphView::full(&g), v(0)), 0.0);
    }

    #[test]
    fn star_score() {
        let g = DiGraph::from_edges(4, [(1, 0), (2, 0), (3, 0)]);
        assert_eq!(harmonic::<f64>(&GraphView::full(&g), v(0)), 3.0);
        assert_eq!(harmonic::<f32>(&GraphView::full(&g), v(0)), 3.0);
    }

    #[test]
    fn objective_extremes() {
        let g = DiGraph::from_edges(4, [(0, 1), (1, 2), (3, 2)]);
        let inst = Instance::new(&g, v(2)).unwrap();
        let empty = EdgeSubset::empty(&g, v(2));
        let full = EdgeSubset::full(&g, v(2));
        assert_eq!(inst.objective::<f64>(&empty).unwrap(), 2.5);
        assert_eq!(inst.objective::<f64>(&full).unwrap(), 0.0);
        assert_eq!(inst.initial_value::<f64>(), 2.5);
        let wrong = EdgeSubset::empty(&g, v(1));
        assert!(inst.objective::<f64>(&wrong).is_err());
    }

    #[test]
    fn restricted_path() {
        let g = path();
        let f = EdgeSubset::from_predecessors(&g, v(2), [v(1)]).unwrap();
        let view = restrict(&g, &f).unwrap();
        let d = distances_to(&view, v(1));
        assert_eq!(d.as_slice(), &[1, 0, UNREACHABLE]);
        assert_eq!(harmonic::<f64>(&view, v(2)), 0.0);
    }

    #[test]
    fn sources_have_zero_residual() {
        let g = DiGraph::from_edges(4, [(1, 0), (2, 0), (3, 0)]);
        let scores = batch_residual_scores::<f64>(&g, v(0)).unwrap();
        assert_eq!(scores, vec![(v(1), 0.0), (v(2), 0.0), (v(3), 0.0)]);
    }

    #[test]
    fn residual_scores_ignore_paths_through_target() {
        let g = DiGraph::from_edges(4, [(3, 0), (0, 1), (1, 0), (2, 1)]);
        let scores = batch_residual_scores::<f64>(&g, v(0)).unwrap();
        // without (1,0) and (3,0), vertex 1 is reached from 0 and 2 only
        assert_eq!(scores, vec![(v(1), 2.0), (v(3), 0.0)]);
    }

    #[test]
    fn bfs_scratch_reuse_is_clean() {
        let g = DiGraph::from_edges(5, [(0, 1), (1, 2), (3, 4)]);
        let mut bfs = Bfs::new(5);
        let view = GraphView::full(&g);
        assert_eq!(bfs.harmonic::<f64>(&view, v(2)), 1.5);
        assert_eq!(bfs.harmonic::<f64>(&view, v(4)), 1.0);
        assert_eq!(bfs.reached(), 2);
        assert_eq!(bfs.harmonic::<f64>(&view, v(2)), 1.5);
    }
}
