//! Instances with known optimal values, built from hardness and tightness
//! constructions. All of them are acyclic.

use std::ops::Range;

use crate::centrality::Instance;
use crate::digraph::{DiGraph, VertexId};
use crate::error::{Error, Result};

/// A generated instance `(G, v, b)` with named vertex groups.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: DiGraph,
    pub target: VertexId,
    pub budget: usize,
    groups: Vec<(&'static str, Range<u32>)>,
}

impl Gadget {
    pub fn instance(&self) -> Instance<'_> {
        Instance::new(&self.graph, self.target).expect("gadget target is a vertex")
    }

    /// Vertices of a named group, e.g. `"N_R"`. Empty for unknown names.
    pub fn group(&self, name: &str) -> Vec<VertexId> {
        self.groups
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, r)| r.clone().map(VertexId).collect())
            .unwrap_or_default()
    }

    pub fn group_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.groups.iter().map(|(n, _)| *n)
    }
}

struct Layout {
    next: u32,
    groups: Vec<(&'static str, Range<u32>)>,
}

impl Layout {
    fn new() -> Self {
        Layout {
            next: 0,
            groups: Vec::new(),
        }
    }

    fn take(&mut self, name: &'static str, count: usize) -> Range<u32> {
        let r = self.next..self.next + count as u32;
        self.next = r.end;
        self.groups.push((name, r.clone()));
        r
    }
}

/// Instance on which greedy is off by a factor growing linearly in `|V|`.
///
/// `v' ← n_L ← o_L`, and `v' ← n_R^j ← o_R^i` for all `i, j ∈ 1..=k`;
/// budget `k`. Greedy first removes `(n_L, v')` and ends at `1 + k/2`; cutting
/// all of `N_R` gives `3/2`.
pub fn greedy_adversarial(k: usize) -> Result<Gadget> {
    if k < 2 {
        return Err(Error::contract(format!("gadget needs k >= 2, got {k}")));
    }
    let mut l = Layout::new();
    let v = l.take("target", 1).start;
    let n_l = l.take("n_L", 1).start;
    let o_l = l.take("o_L", 1).start;
    let n_r = l.take("N_R", k);
    let o_r = l.take("O_R", k);

    let mut edges = vec![(n_l, v), (o_l, n_l)];
    edges.extend(n_r.clone().map(|w| (w, v)));
    for o in o_r.clone() {
        edges.extend(n_r.clone().map(|n| (o, n)));
    }
    Ok(Gadget {
        graph: DiGraph::from_edges(l.next as usize, edges),
        target: VertexId(v),
        budget: k,
        groups: l.groups,
    })
}

/// Instance on which the residual-score ranking is off by `Θ(√h_G(v))`.
///
/// `N_L` and `N_R` both feed `v'`. Each `n_L^j` has `k - 1` private feeders
/// from `O_L` (residual score `k - 1`); every `n_R^j` is fed by all of `O_R`
/// (residual score `k`). Budget `k`. Cutting `N_R` leaves `k + k(k-1)/2`;
/// cutting `N_L` leaves `k + k/2`.
pub fn alg1_adversarial(k: usize) -> Result<Gadget> {
    if k < 2 {
        return Err(Error::contract(format!("gadget needs k >= 2, got {k}")));
    }
    let mut l = Layout::new();
    let v = l.take("target", 1).start;
    let n_l = l.take("N_L", k);
    let n_r = l.take("N_R", k);
    let o_r = l.take("O_R", k);
    let o_l = l.take("O_L", k * (k - 1));

    let mut edges: Vec<(u32, u32)> = n_l.clone().chain(n_r.clone()).map(|w| (w, v)).collect();
    for (i, o) in o_l.enumerate() {
        edges.push((o, n_l.start + (i / (k - 1)) as u32));
    }
    for o in o_r {
        edges.extend(n_r.clone().map(|n| (o, n)));
    }
    Ok(Gadget {
        graph: DiGraph::from_edges(l.next as usize, edges),
        target: VertexId(v),
        budget: k,
        groups: l.groups,
    })
}

/// An instance of minimum k-union: choose `k` of the sets minimizing the size
/// of their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KUnionInstance {
    n: usize,
    sets: Vec<Vec<usize>>,
    k: usize,
}

impl KUnionInstance {
    /// Sets are deduplicated and sorted. The sets must cover `{0, …, n-1}`
    /// and `1 ≤ k ≤ m`.
    pub fn new(n: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let mut covered = vec![false; n];
        let mut clean = Vec::with_capacity(sets.len());
        for mut s in sets {
            s.sort_unstable();
            s.dedup();
            for &e in &s {
                if e >= n {
                    return Err(Error::contract(format!("element {e} outside ground set of size {n}")));
                }
                covered[e] = true;
            }
            clean.push(s);
        }
        if covered.iter().any(|&c| !c) {
            return Err(Error::contract("sets do not cover the ground set"));
        }
        if k == 0 || k > clean.len() {
            return Err(Error::contract(format!("k = {k} must lie in 1..={}", clean.len())));
        }
        Ok(KUnionInstance { n, sets: clean, k })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn union_size(&self, chosen: &[usize]) -> usize {
        let mut hit = vec![false; self.n];
        for &j in chosen {
            for &e in &self.sets[j] {
                hit[e] = true;
            }
        }
        hit.iter().filter(|&&h| h).count()
    }

    /// Exhaustive minimum k-union: the lexicographically first optimal index
    /// set and its union size.
    pub fn solve_brute_force(&self) -> (Vec<usize>, usize) {
        let mut best: Option<(Vec<usize>, usize)> = None;
        super::oracle::for_each_combination(self.sets.len(), self.k, |c| {
            let u = self.union_size(c);
            if best.as_ref().is_none_or(|(_, b)| u < *b) {
                best = Some((c.to_vec(), u));
            }
        });
        best.expect("k <= m gives at least one combination")
    }
}

/// The hardness reduction from minimum k-union.
///
/// Vertices: `v_0`, then one vertex per set (`"S"`), then one per element
/// (`"U"`). Edges `v_S → v_0` for every set and `v_e → v_S` for `e ∈ S`.
/// Budget `m - k`. Removing the set-edges indexed by `J` leaves objective
/// `(m - b) + ½|⋃_{j ∉ J} S_j|`.
pub fn kunion(inst: &KUnionInstance) -> Gadget {
    let m = inst.sets.len();
    let mut l = Layout::new();
    let v0 = l.take("target", 1).start;
    let s = l.take("S", m);
    let u = l.take("U", inst.n);
    let mut edges: Vec<(u32, u32)> = s.clone().map(|vs| (vs, v0)).collect();
    for (j, set) in inst.sets.iter().enumerate() {
        edges.extend(set.iter().map(|&e| (u.start + e as u32, s.start + j as u32)));
    }
    Gadget {
        graph: DiGraph::from_edges(l.next as usize, edges),
        target: VertexId(v0),
        budget: m - inst.k,
        groups: l.groups,
    }
}
