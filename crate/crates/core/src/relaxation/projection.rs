use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A real vector indexed by the in-list positions of the target.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalPoint<T>(Vec<T>);

impl<T: Scalar> FractionalPoint<T> {
    pub fn new(coords: Vec<T>) -> Self {
        FractionalPoint(coords)
    }

    pub fn zeros(dimension: usize) -> Self {
        FractionalPoint(vec![T::zero(); dimension])
    }

    /// Indicator vector `1_F` of the given positions.
    pub fn indicator(dimension: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut x = vec![T::zero(); dimension];
        for e in members {
            x[e] = T::one();
        }
        FractionalPoint(x)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        FractionalPoint(mask.iter().map(|&m| if m { T::one() } else { T::zero() }).collect())
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn l1_norm(&self) -> T {
        self.0.iter().map(|v| v.abs()).sum()
    }

    pub fn in_unit_box(&self) -> bool {
        in_unit_box(&self.0)
    }
}

impl<T> Index<usize> for FractionalPoint<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

pub(crate) fn in_unit_box<T: Scalar>(x: &[T]) -> bool {
    x.iter().all(|&v| v >= T::zero() && v <= T::one())
}

/// `C = {x : ‖x‖₁ ≤ b, x ∈ [0,1]^n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibleRegion<T> {
    budget: T,
    dimension: usize,
}

impl<T: Scalar> FeasibleRegion<T> {
    pub fn new(budget: T, dimension: usize) -> Result<Self> {
        if !budget.is_finite() || budget < T::zero() {
            return Err(Error::contract(format!("invalid L1 budget {budget}")));
        }
        Ok(FeasibleRegion { budget, dimension })
    }

    pub fn with_budget(budget: usize, dimension: usize) -> Self {
        FeasibleRegion {
            budget: T::from_count(budget),
            dimension,
        }
    }

    pub fn budget(&self) -> T {
        self.budget
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Box membership exactly, budget up to `tol`.
    pub fn contains(&self, x: &[T], tol: T) -> bool {
        x.len() == self.dimension
            && in_unit_box(x)
            && x.iter().copied().sum::<T>() <= self.budget + tol
    }

    /// An upper bound on `max_{x,y ∈ C} ½‖x - y‖²`: `min(b, n/2)`.
    ///
    /// `½‖x-y‖² ≤ ½‖x-y‖₁ ≤ ½(‖x‖₁ + ‖y‖₁) ≤ b` inside the box, and the box
    /// alone gives `n/2`.
    pub fn half_squared_diameter_bound(&self) -> T {
        self.budget.min(T::from_count(self.dimension) / T::lit(2.0))
    }

    pub fn project(&self, x: &[T], tol: T) -> FractionalPoint<T> {
        project_onto(x, self, tol)
    }
}

/// Componentwise clamp to `[0, 1]`.
pub fn project_box<T: Scalar>(x: &[T]) -> FractionalPoint<T> {
    FractionalPoint(x.iter().map(|&v| clamp01(v)).collect())
}

#[inline]
fn clamp01<T: Scalar>(v: T) -> T {
    v.max(T::zero()).min(T::one())
}

/// `φ(λ) = ‖clamp(x - λ·1)‖₁ - b`, non-increasing in `λ`.
pub fn phi<T: Scalar>(x: &[T], lambda: T, budget: T) -> T {
    x.iter().map(|&v| clamp01(v - lambda)).sum::<T>() - budget
}

/// Euclidean projection onto `C`.
///
/// If the clamped point already meets the budget it is the answer. Otherwise
/// the answer is `clamp(x - λ*·1)` for a root `λ*` of `φ`, found by bisection
/// on `[0, max_e x_e]` to width `tol`. The upper end of the bracket is
/// returned, so the budget holds exactly and the L1 norm is short of `b` by at
/// most `n·tol`.
pub fn project_onto<T: Scalar>(x: &[T], region: &FeasibleRegion<T>, tol: T) -> FractionalPoint<T> {
    assert_eq!(x.len(), region.dimension, "point and region dimensions differ");
    let b = region.budget;
    let clamped = project_box(x);
    if clamped.0.iter().copied().sum::<T>() <= b {
        return clamped;
    }
    let mut lo = T::zero();
    let mut hi = x.iter().copied().fold(T::neg_infinity(), T::max);
    for _ in 0..256 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if phi(x, mid, b) > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    FractionalPoint(x.iter().map(|&v| clamp01(v - hi)).collect())
}
