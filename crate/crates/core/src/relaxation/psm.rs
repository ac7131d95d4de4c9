use std::io::Write;

use super::lovasz::{chain_subgradient, lovasz_value, ChainPrefix};
use super::projection::{project_onto, FeasibleRegion, FractionalPoint};
use super::set_function::SetFunction;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_ITERS: usize = 1000;
pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;

/// Parameters of the projected subgradient method.
///
/// Step sizes are `η_t = √(2Θ) / (L √(t+1))`, which gives
/// `f̂_best(t) - f̂* ≤ 2(1 + ln 3) L √(2Θ) / √(t+2)` for `t ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsmConfig<T> {
    /// Upper bound on half the squared diameter of the feasible region.
    pub theta: T,
    /// Bound on subgradient norms; `f(∅)` for a monotone non-increasing
    /// function vanishing on the full set.
    pub lipschitz: T,
    /// Stop once `t ≥ max_iters` (ignored when `epsilon_prime` is set).
    pub max_iters: usize,
    /// Bracket width at which the projection's bisection stops.
    pub bisection_tol: T,
    /// Target additive error; derives the iteration count from the bound.
    pub epsilon_prime: Option<T>,
    /// Keep a per-iteration `(t, value, best)` log.
    pub record: bool,
}

impl<T: Scalar> PsmConfig<T> {
    pub fn new(theta: T, lipschitz: T) -> Self {
        PsmConfig {
            theta,
            lipschitz,
            max_iters: DEFAULT_MAX_ITERS,
            bisection_tol: T::lit(DEFAULT_BISECTION_TOL),
            epsilon_prime: None,
            record: true,
        }
    }

    /// `Θ = min(b, n/2)` and `L = f(∅)`.
    pub fn for_problem<F: SetFunction<T>>(f: &F, region: &FeasibleRegion<T>) -> Self {
        let empty = vec![false; f.ground_size()];
        Self::new(region.half_squared_diameter_bound(), f.value(&empty))
    }

    pub fn with_max_iters(mut self, max_iters: usize) -> Self {
        self.max_iters = max_iters;
        self
    }

    pub fn with_epsilon_prime(mut self, eps: T) -> Self {
        self.epsilon_prime = Some(eps);
        self
    }

    pub fn with_bisection_tol(mut self, tol: T) -> Self {
        self.bisection_tol = tol;
        self
    }

    pub fn with_record(mut self, record: bool) -> Self {
        self.record = record;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let finite_nonneg = |v: T| v.is_finite() && v >= T::zero();
        if !finite_nonneg(self.theta) {
            return Err(Error::contract(format!("theta must be >= 0, got {}", self.theta)));
        }
        if !finite_nonneg(self.lipschitz) {
            return Err(Error::contract(format!(
                "lipschitz constant must be >= 0, got {}",
                self.lipschitz
            )));
        }
        if self.bisection_tol.is_nan() || self.bisection_tol <= T::zero() {
            return Err(Error::contract("bisection tolerance must be positive"));
        }
        if let Some(eps) = self.epsilon_prime {
            if eps.is_nan() || eps <= T::zero() {
                return Err(Error::contract("epsilon' must be positive"));
            }
        }
        Ok(())
    }

    /// `η_t`.
    pub fn step_size(&self, t: usize) -> T {
        (T::lit(2.0) * self.theta).sqrt() / (self.lipschitz * T::from_count(t + 1).sqrt())
    }

    /// `2(1 + ln 3) L √(2Θ)`, the numerator of the gap bound.
    fn bound_constant(&self) -> T {
        T::lit(2.0) * (T::one() + T::lit(3.0).ln()) * self.lipschitz * (T::lit(2.0) * self.theta).sqrt()
    }

    /// Guaranteed bound on `f̂_best(t) - f̂*`, valid for `t ≥ 2`.
    pub fn gap_bound(&self, t: usize) -> T {
        self.bound_constant() / T::from_count(t + 2).sqrt()
    }

    /// Number of steps to run: `max_iters`, or the smallest `t` with
    /// `t ≥ (2(1+ln 3) L √(2Θ) / ε')² - 2` when `ε'` is set.
    pub fn iteration_budget(&self) -> usize {
        match self.epsilon_prime {
            None => self.max_iters,
            Some(eps) => {
                let ratio = self.bound_constant() / eps;
                let need = (ratio * ratio - T::lit(2.0)).ceil();
                need.max(T::zero()).to_usize().unwrap_or(usize::MAX)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow<T> {
    pub t: usize,
    pub value: T,
    pub best_value: T,
}

/// History of a projected subgradient run.
#[derive(Debug, Clone, PartialEq)]
pub struct PsmTrace<T> {
    /// Number of steps taken; iterates `x_0 … x_iterations` were evaluated.
    pub iterations: usize,
    pub best_value: T,
    pub best_point: FractionalPoint<T>,
    pub best_iteration: usize,
    pub last_point: FractionalPoint<T>,
    /// Empty unless the run was configured to record.
    pub rows: Vec<TraceRow<T>>,
}

impl<T: Scalar> PsmTrace<T> {
    /// Writes `t,value,best_value` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["t", "value", "best_value"])?;
        for row in &self.rows {
            w.write_record([
                row.t.to_string(),
                row.value.to_string(),
                row.best_value.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Projected subgradient method on the Lovász extension of `f` over `region`.
///
/// Iterates `x_{t+1} = proj_C(x_t - η_t g_t)` until the iteration budget is
/// spent and returns the best iterate. With `L = 0` the extension is
/// identically zero on the box and `x0` is returned as is.
pub fn psm_run<T, F>(
    f: &F,
    region: &FeasibleRegion<T>,
    config: &PsmConfig<T>,
    x0: &FractionalPoint<T>,
) -> Result<PsmTrace<T>>
where
    T: Scalar,
    F: SetFunction<T>,
{
    config.validate()?;
    let n = f.ground_size();
    if region.dimension() != n {
        return Err(Error::contract(format!(
            "region dimension {} differs from ground set size {n}",
            region.dimension()
        )));
    }
    let slack = T::from_count(n.max(1)) * config.bisection_tol;
    if !region.contains(x0.as_slice(), slack) {
        return Err(Error::contract("initial point is not in the feasible region"));
    }

    let steps = if config.lipschitz == T::zero() {
        0
    } else {
        config.iteration_budget()
    };

    let mut x = x0.clone();
    let mut best_value = T::infinity();
    let mut best_point = x0.clone();
    let mut best_iteration = 0;
    let mut rows = Vec::new();
    if config.record {
        rows.reserve(steps.saturating_add(1).min(1 << 20));
    }

    let mut t = 0;
    loop {
        let chain = ChainPrefix::of(x.as_slice());
        let values = f.chain_values(chain.order());
        let value = lovasz_value(x.as_slice(), &chain, &values);
        if value < best_value {
            best_value = value;
            best_point = x.clone();
            best_iteration = t;
        }
        if config.record {
            rows.push(TraceRow {
                t,
                value,
                best_value,
            });
        }
        if t >= steps {
            break;
        }
        let g = chain_subgradient(&chain, &values);
        let eta = config.step_size(t);
        let moved: Vec<T> = x
            .as_slice()
            .iter()
            .zip(&g)
            .map(|(&xi, &gi)| xi - eta * gi)
            .collect();
        x = project_onto(&moved, region, config.bisection_tol);
        t += 1;
    }

    Ok(PsmTrace {
        iterations: t,
        best_value,
        best_point,
        best_iteration,
        last_point: x,
        rows,
    })
}
