//! Simple directed graphs in compressed adjacency form.
//!
//! Vertices are dense `u32` indices. Both successor and predecessor lists are
//! stored sorted, so the in-list of a vertex doubles as a stable index space
//! for its incoming edges: an [`EdgeSubset`] is a membership mask over that
//! list rather than a modified copy of the graph.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Counters collected while building a simple graph from raw edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// Immutable simple digraph with forward and reverse CSR adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct DiGraph {
    out_offsets: Vec<usize>,
    out_targets: Vec<u32>,
    in_offsets: Vec<usize>,
    in_sources: Vec<u32>,
}

impl fmt::Debug for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiGraph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl DiGraph {
    /// Builds a simple graph on `n` vertices, dropping self-loops and
    /// duplicate edges. Panics if an endpoint is out of range.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::from_edges_with_stats(n, edges).0
    }

    pub fn from_edges_with_stats<I>(n: usize, edges: I) -> (Self, BuildStats)
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        assert!(n <= u32::MAX as usize, "vertex count exceeds u32 range");
        let mut stats = BuildStats::default();
        let mut list: Vec<(u32, u32)> = edges
            .into_iter()
            .filter(|&(u, w)| {
                assert!(
                    (u as usize) < n && (w as usize) < n,
                    "edge ({u}, {w}) out of range for {n} vertices"
                );
                if u == w {
                    stats.self_loops += 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        stats.duplicates = before - list.len();

        let mut out_offsets = vec![0usize; n + 1];
        let mut in_offsets = vec![0usize; n + 1];
        for &(u, w) in &list {
            out_offsets[u as usize + 1] += 1;
            in_offsets[w as usize + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out_targets: Vec<u32> = list.iter().map(|&(_, w)| w).collect();

        // sorted by (u, w), so filling in-lists in this order keeps them sorted
        let mut cursor = in_offsets.clone();
        let mut in_sources = vec![0u32; list.len()];
        for &(u, w) in &list {
            let slot = &mut cursor[w as usize];
            in_sources[*slot] = u;
            *slot += 1;
        }

        let graph = DiGraph {
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        };
        (graph, stats)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count() as u32).map(VertexId)
    }

    /// Sorted successors of `u` as raw indices.
    #[inline]
    pub fn successors_raw(&self, u: VertexId) -> &[u32] {
        let i = u.index();
        &self.out_targets[self.out_offsets[i]..self.out_offsets[i + 1]]
    }

    /// Sorted predecessors of `u` as raw indices.
    #[inline]
    pub fn predecessors_raw(&self, u: VertexId) -> &[u32] {
        let i = u.index();
        &self.in_sources[self.in_offsets[i]..self.in_offsets[i + 1]]
    }

    /// Sorted list `N_in(v)`.
    pub fn in_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.predecessors_raw(v).iter().map(|&w| VertexId(w)).collect()
    }

    pub fn out_neighbors(&self, u: VertexId) -> Vec<VertexId> {
        self.successors_raw(u).iter().map(|&w| VertexId(w)).collect()
    }

    #[inline]
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_offsets[v.index() + 1] - self.in_offsets[v.index()]
    }

    #[inline]
    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out_offsets[u.index() + 1] - self.out_offsets[u.index()]
    }

    pub fn has_edge(&self, u: VertexId, w: VertexId) -> bool {
        self.successors_raw(u).binary_search(&w.0).is_ok()
    }

    /// Position of `w` in the in-list of `v`, if `(w, v)` is an edge.
    pub fn in_position(&self, v: VertexId, w: VertexId) -> Option<usize> {
        self.predecessors_raw(v).binary_search(&w.0).ok()
    }

    /// All edges in ascending `(u, w)` order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.successors_raw(u)
                .iter()
                .map(move |&w| (u, VertexId(w)))
        })
    }

    /// True when the graph has no directed cycle (Kahn's algorithm).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.in_degree(v)).collect();
        let mut stack: Vec<u32> = (0..n as u32).filter(|&v| indeg[v as usize] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &w in self.successors_raw(VertexId(u)) {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == n
    }

    /// Writes one `"u w"` line per edge in sorted order. With `labels`, the
    /// dense ids are replaced by `labels[id]`.
    pub fn write_edge_list<W: Write>(&self, mut out: W, labels: Option<&[u64]>) -> Result<()> {
        for (u, w) in self.edges() {
            match labels {
                Some(l) => writeln!(out, "{} {}", l[u.index()], l[w.index()])?,
                None => writeln!(out, "{} {}", u, w)?,
            }
        }
        Ok(())
    }
}

/// Statistics reported by [`parse_edge_list`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseStats {
    pub data_lines: usize,
    pub comment_lines: usize,
    pub self_loops: usize,
    pub duplicates: usize,
}

/// A parsed graph together with the dense-to-original id mapping.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: DiGraph,
    /// `original_ids[dense]` is the id that appeared in the input.
    pub original_ids: Vec<u64>,
    pub stats: ParseStats,
    index: HashMap<u64, u32>,
}

impl ParsedGraph {
    pub fn dense_id(&self, original: u64) -> Option<VertexId> {
        self.index.get(&original).map(|&d| VertexId(d))
    }

    pub fn resolve(&self, original: u64) -> Result<VertexId> {
        self.dense_id(original).ok_or(Error::UnknownVertex(original))
    }

    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v.index()]
    }

    /// Edges in original ids, sorted.
    pub fn labeled_edges(&self) -> Vec<(u64, u64)> {
        let mut e: Vec<(u64, u64)> = self
            .graph
            .edges()
            .map(|(u, w)| (self.original_id(u), self.original_id(w)))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.graph
            .write_edge_list(&mut buf, Some(&self.original_ids))
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }
}

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `%` or `#` are comments and blank lines are skipped.
/// Every other line must start with two integer tokens `u w`; further tokens
/// (weights, timestamps) are ignored. Ids are remapped to dense indices in
/// first-appearance order. Self-loops and repeated edges are dropped and
/// counted in [`ParseStats`].
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<ParsedGraph> {
    let mut index: HashMap<u64, u32> = HashMap::new();
    let mut original_ids: Vec<u64> = Vec::new();
    let mut raw: Vec<(u32, u32)> = Vec::new();
    let mut stats = ParseStats::default();

    let mut intern = |id: u64| -> u32 {
        *index.entry(id).or_insert_with(|| {
            original_ids.push(id);
            (original_ids.len() - 1) as u32
        })
    };

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('%') || trimmed.starts_with('#') {
            stats.comment_lines += 1;
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected two vertex ids, found {trimmed:?}"),
            });
        };
        let parse = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid vertex id {tok:?}"),
            })
        };
        let (u, w) = (parse(a)?, parse(b)?);
        let du = intern(u);
        let dw = intern(w);
        raw.push((du, dw));
        stats.data_lines += 1;
    }

    if stats.data_lines == 0 {
        return Err(Error::EmptyInput);
    }

    let (graph, build) = DiGraph::from_edges_with_stats(original_ids.len(), raw);
    stats.self_loops = build.self_loops;
    stats.duplicates = build.duplicates;
    Ok(ParsedGraph {
        graph,
        original_ids,
        stats,
        index,
    })
}

pub fn parse_edge_list_str(text: &str) -> Result<ParsedGraph> {
    parse_edge_list(text.as_bytes())
}

/// A subset `F` of the incoming edges `ρ(v)` of a target vertex.
///
/// Stored as a mask over the sorted in-list of the target: bit `i` stands for
/// the edge `(w_i, v)` where `w_i` is the `i`-th predecessor of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    target: VertexId,
    mask: Vec<bool>,
    len: usize,
}

impl EdgeSubset {
    pub fn empty(graph: &DiGraph, target: VertexId) -> Self {
        EdgeSubset {
            target,
            mask: vec![false; graph.in_degree(target)],
            len: 0,
        }
    }

    pub fn full(graph: &DiGraph, target: VertexId) -> Self {
        let d = graph.in_degree(target);
        EdgeSubset {
            target,
            mask: vec![true; d],
            len: d,
        }
    }

    /// Subset given by in-list positions. Out-of-range positions are a
    /// contract violation; repeated positions are merged.
    pub fn from_positions<I>(graph: &DiGraph, target: VertexId, positions: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(graph, target);
        for p in positions {
            if p >= s.mask.len() {
                return Err(Error::contract(format!(
                    "position {p} outside in-list of vertex {target} (in-degree {})",
                    s.mask.len()
                )));
            }
            s.insert_position(p);
        }
        Ok(s)
    }

    /// Subset given by the tails `w` of edges `(w, target)`.
    pub fn from_predecessors<I>(graph: &DiGraph, target: VertexId, tails: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut s = Self::empty(graph, target);
        for w in tails {
            let p = graph.in_position(target, w).ok_or_else(|| {
                Error::contract(format!("({w}, {target}) is not an incoming edge of {target}"))
            })?;
            s.insert_position(p);
        }
        Ok(s)
    }

    pub fn from_mask(target: VertexId, mask: Vec<bool>) -> Self {
        let len = mask.iter().filter(|&&m| m).count();
        EdgeSubset { target, mask, len }
    }

    #[inline]
    pub fn target(&self) -> VertexId {
        self.target
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    #[inline]
    pub fn contains_position(&self, p: usize) -> bool {
        self.mask[p]
    }

    pub fn insert_position(&mut self, p: usize) {
        if !self.mask[p] {
            self.mask[p] = true;
            self.len += 1;
        }
    }

    pub fn remove_position(&mut self, p: usize) {
        if self.mask[p] {
            self.mask[p] = false;
            self.len -= 1;
        }
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    /// Tails of the member edges, ascending.
    pub fn predecessors(&self, graph: &DiGraph) -> Vec<VertexId> {
        let preds = graph.predecessors_raw(self.target);
        self.positions().map(|p| VertexId(preds[p])).collect()
    }

    pub fn is_subset_of(&self, other: &EdgeSubset) -> bool {
        self.target == other.target
            && self.mask.len() == other.mask.len()
            && self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    pub(crate) fn check_against(&self, graph: &DiGraph) -> Result<()> {
        if !graph.contains(self.target) {
            return Err(Error::contract(format!(
                "target {} outside graph of {} vertices",
                self.target,
                graph.vertex_count()
            )));
        }
        if self.mask.len() != graph.in_degree(self.target) {
            return Err(Error::contract(format!(
                "edge subset built for in-degree {} but vertex {} has in-degree {}",
                self.mask.len(),
                self.target,
                graph.in_degree(self.target)
            )));
        }
        Ok(())
    }
}

/// Logical view of `G \ F` for `F ⊆ ρ(target)`. Nothing is copied; the
/// predecessor iterator skips masked edges of the target.
#[derive(Debug, Clone, Copy)]
pub struct GraphView<'a> {
    graph: &'a DiGraph,
    removed: Option<(VertexId, &'a [bool])>,
}

impl<'a> GraphView<'a> {
    pub fn full(graph: &'a DiGraph) -> Self {
        GraphView {
            graph,
            removed: None,
        }
    }

    /// View with the masked in-edges of `target` removed.
    pub fn with_mask(graph: &'a DiGraph, target: VertexId, mask: &'a [bool]) -> Result<Self> {
        if !graph.contains(target) || mask.len() != graph.in_degree(target) {
            return Err(Error::contract(format!(
                "mask of length {} does not match in-list of vertex {target}",
                mask.len()
            )));
        }
        Ok(GraphView {
            graph,
            removed: Some((target, mask)),
        })
    }

    pub(crate) fn with_mask_unchecked(graph: &'a DiGraph, target: VertexId, mask: &'a [bool]) -> Self {
        debug_assert_eq!(mask.len(), graph.in_degree(target));
        GraphView {
            graph,
            removed: Some((target, mask)),
        }
    }

    #[inline]
    pub fn graph(&self) -> &'a DiGraph {
        self.graph
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        let removed = self
            .removed
            .map_or(0, |(_, m)| m.iter().filter(|&&b| b).count());
        self.graph.edge_count() - removed
    }

    /// Calls `visit` for every predecessor of `u` that survives in the view.
    #[inline]
    pub fn for_each_predecessor(&self, u: VertexId, mut visit: impl FnMut(u32)) {
        let preds = self.graph.predecessors_raw(u);
        match self.removed {
            Some((t, mask)) if t == u => {
                for (&w, &gone) in preds.iter().zip(mask) {
                    if !gone {
                        visit(w);
                    }
                }
            }
            _ => preds.iter().for_each(|&w| visit(w)),
        }
    }

    pub fn in_neighbors(&self, u: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        self.for_each_predecessor(u, |w| out.push(VertexId(w)));
        out
    }

    pub fn has_edge(&self, u: VertexId, w: VertexId) -> bool {
        match self.removed {
            Some((t, mask)) if t == w => self
                .graph
                .in_position(w, u)
                .is_some_and(|p| !mask[p]),
            _ => self.graph.has_edge(u, w),
        }
    }
}

/// `G \ F` as a view. Fails if `F` was built for a different in-list.
pub fn restrict<'a>(graph: &'a DiGraph, removed: &'a EdgeSubset) -> Result<GraphView<'a>> {
    removed.check_against(graph)?;
    Ok(GraphView::with_mask_unchecked(
        graph,
        removed.target(),
        removed.mask(),
    ))
}
