//! Local harmonic centrality minimization.
//!
//! Given a directed graph, a target vertex `v` and a budget `b`, pick at most
//! `b` incoming edges of `v` whose removal minimizes the harmonic centrality
//! of `v`. The crate provides:
//!
//! - [`digraph`]: edge-list ingestion and an immutable CSR digraph with
//!   allocation-free removal views restricted to the target's in-edges;
//! - [`centrality`]: reverse-BFS distances, harmonic scores and the set
//!   objective `F -> h_{G \ F}(v)`;
//! - [`baselines`]: Empty, Random, Degree and the greedy algorithm;
//! - [`scalable`]: the residual-score ranking algorithm (`top_b_cut`);
//! - [`relaxation`]: Lovász extension, projection onto the box/L1 region,
//!   the projected subgradient method and threshold rounding;
//! - [`harness`]: gadget generators, brute-force oracles, target selection
//!   and the experiment runner with CSV output.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix the scalar to `f64`, which is what the CLI and the
//! experiment harness use.

pub mod baselines;
pub mod centrality;
pub mod digraph;
mod error;
pub mod harness;
pub mod relaxation;
pub mod scalable;
mod scalar;

pub use baselines::Budget;
pub use centrality::{DistanceVector, Instance};
pub use digraph::{DiGraph, EdgeSubset, GraphView, ParsedGraph, VertexId};
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Harmonic scores and objective values in double precision.
pub type Score = f64;
/// A point of `[0,1]^{ρ(v)}` in double precision.
pub type FractionalPoint = relaxation::FractionalPoint<f64>;
/// Box ∩ L1-ball feasible region in double precision.
pub type FeasibleRegion = relaxation::FeasibleRegion<f64>;
/// Projected subgradient configuration in double precision.
pub type PsmConfig = relaxation::PsmConfig<f64>;
/// Projected subgradient history in double precision.
pub type PsmTrace = relaxation::PsmTrace<f64>;
/// Bicriteria configuration in double precision.
pub type BicriteriaConfig = relaxation::BicriteriaConfig<f64>;
/// Bicriteria outcome in double precision.
pub type BicriteriaOutcome = relaxation::BicriteriaOutcome<f64>;
/// Ranked in-neighbors with double precision residual scores.
pub type RankedNeighbors = scalable::RankedNeighbors<f64>;
