use super::projection::{FeasibleRegion, FractionalPoint};
use super::psm::{psm_run, PsmConfig, PsmTrace, DEFAULT_BISECTION_TOL, DEFAULT_MAX_ITERS};
use super::rounding::round_positions;
use crate::baselines::clamp_budget;
use crate::centrality::Instance;
use crate::digraph::EdgeSubset;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Settings for relax-and-round.
#[derive(Debug, Clone, PartialEq)]
pub struct BicriteriaConfig<T> {
    /// Rounding threshold lower end, in `(0, 1)`.
    pub alpha: T,
    /// Target error `ε`; when set the solver runs until the relaxation is
    /// `(1 - α)ε`-optimal instead of stopping at `max_iters`.
    pub epsilon: Option<T>,
    pub max_iters: usize,
    pub bisection_tol: T,
    pub seed: u64,
    /// Starting point; the origin when `None`.
    pub x0: Option<FractionalPoint<T>>,
    pub record_trace: bool,
}

impl<T: Scalar> BicriteriaConfig<T> {
    pub fn new(alpha: T) -> Self {
        BicriteriaConfig {
            alpha,
            epsilon: None,
            max_iters: DEFAULT_MAX_ITERS,
            bisection_tol: T::lit(DEFAULT_BISECTION_TOL),
            seed: 0,
            x0: None,
            record_trace: false,
        }
    }

    pub fn with_max_iters(mut self, iters: usize) -> Self {
        self.max_iters = iters;
        self
    }

    pub fn with_epsilon(mut self, eps: T) -> Self {
        self.epsilon = Some(eps);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trace(mut self, record: bool) -> Self {
        self.record_trace = record;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BicriteriaOutcome<T> {
    pub subset: EdgeSubset,
    /// The rounding threshold that was drawn.
    pub threshold: T,
    pub trace: PsmTrace<T>,
}

/// Runs the projected subgradient method on the relaxation for budget `b`.
pub fn solve_relaxation<T: Scalar>(
    inst: &Instance<'_>,
    b: usize,
    config: &BicriteriaConfig<T>,
) -> Result<PsmTrace<T>> {
    let alpha = config.alpha;
    if !(alpha > T::zero() && alpha < T::one()) {
        return Err(Error::contract(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let m = inst.in_degree();
    let b = clamp_budget(b, m);
    let region = FeasibleRegion::with_budget(b, m);
    let mut psm = PsmConfig::for_problem(inst, &region)
        .with_max_iters(config.max_iters)
        .with_bisection_tol(config.bisection_tol)
        .with_record(config.record_trace);
    if let Some(eps) = config.epsilon {
        if eps.is_nan() || eps <= T::zero() {
            return Err(Error::contract("epsilon must be positive"));
        }
        psm = psm.with_epsilon_prime((T::one() - alpha) * eps);
    }
    let x0 = config.x0.clone().unwrap_or_else(|| FractionalPoint::zeros(m));
    psm_run(inst, &region, &psm, &x0)
}

/// Relax, solve, and round once. The returned set may exceed `b`; only its
/// expected size is bounded, by `b/α`.
pub fn bicriteria_solve<T: Scalar>(
    inst: &Instance<'_>,
    b: usize,
    config: &BicriteriaConfig<T>,
) -> Result<BicriteriaOutcome<T>> {
    let trace = solve_relaxation(inst, b, config)?;
    let (positions, threshold) = round_positions(&trace.best_point, config.alpha, config.seed)?;
    let subset = EdgeSubset::from_positions(inst.graph(), inst.target(), positions)?;
    Ok(BicriteriaOutcome {
        subset,
        threshold,
        trace,
    })
}
