//! Continuous relaxation over the Lovász extension and its rounding.
//!
//! The pipeline is: minimize the Lovász extension `f̂` of the objective over
//! `C = {x ∈ [0,1]^{ρ(v)} : ‖x‖₁ ≤ b}` with a projected subgradient method,
//! then keep every edge whose coordinate is at least a threshold drawn
//! uniformly from `[α, 1]`. In expectation the result has at most `b/α`
//! edges and objective at most `OPT/(1-α) + ε`.
//!
//! Everything except [`bicriteria_solve`] works on an abstract
//! [`SetFunction`], so the numerical parts can be exercised on set functions
//! other than harmonic centrality.

mod bicriteria;
mod lovasz;
mod projection;
mod psm;
mod rounding;
mod set_function;

pub use bicriteria::{bicriteria_solve, solve_relaxation, BicriteriaConfig, BicriteriaOutcome};
pub use lovasz::{
    chain_subgradient, lovasz_eval, lovasz_subgradient, lovasz_value, ChainPrefix, LovaszExtension, LovaszPoint,
};
pub use projection::{phi, project_box, project_onto, FeasibleRegion, FractionalPoint};
pub use psm::{psm_run, PsmConfig, PsmTrace, TraceRow, DEFAULT_BISECTION_TOL, DEFAULT_MAX_ITERS};
pub use rounding::{draw_threshold, round_positions, round_solution, rounding_draws, threshold_positions};
pub use set_function::SetFunction;
