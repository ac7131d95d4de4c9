use std::cmp::Ordering;

use super::projection::{in_unit_box, FractionalPoint};
use super::set_function::SetFunction;
use crate::centrality::Instance;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Permutation sorting `x` non-increasingly, ties by ascending index. The
/// prefixes `X_i = {e_1, …, e_i}` form the chain the extension is built on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPrefix {
    order: Vec<usize>,
}

impl ChainPrefix {
    pub fn of<T: Scalar>(x: &[T]) -> Self {
        let mut order: Vec<usize> = (0..x.len()).collect();
        order.sort_by(|&a, &b| x[b].partial_cmp(&x[a]).unwrap_or(Ordering::Equal));
        ChainPrefix { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `X_i`.
    pub fn prefix(&self, i: usize) -> &[usize] {
        &self.order[..i]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// `f̂(x) = (1 - x_{e_1}) f(X_0) + Σ_{i<m} (x_{e_i} - x_{e_{i+1}}) f(X_i) + x_{e_m} f(X_m)`
/// from precomputed chain values `f(X_0), …, f(X_m)`.
pub fn lovasz_value<T: Scalar>(x: &[T], chain: &ChainPrefix, values: &[T]) -> T {
    let order = chain.order();
    let m = order.len();
    assert_eq!(values.len(), m + 1, "need f(X_0) … f(X_m)");
    if m == 0 {
        return values[0];
    }
    let mut total = (T::one() - x[order[0]]) * values[0];
    for i in 1..m {
        total += (x[order[i - 1]] - x[order[i]]) * values[i];
    }
    total + x[order[m - 1]] * values[m]
}

/// The subgradient whose `e_i` component is `f(X_i) - f(X_{i-1})`.
pub fn chain_subgradient<T: Scalar>(chain: &ChainPrefix, values: &[T]) -> Vec<T> {
    let order = chain.order();
    assert_eq!(values.len(), order.len() + 1, "need f(X_0) … f(X_m)");
    let mut g = vec![T::zero(); order.len()];
    for (i, &e) in order.iter().enumerate() {
        g[e] = values[i + 1] - values[i];
    }
    g
}

/// Lovász extension of a set function, evaluated through its chain.
#[derive(Debug, Clone, Copy)]
pub struct LovaszExtension<'f, F> {
    f: &'f F,
}

/// Value and subgradient at one point, sharing the `m + 1` set evaluations.
#[derive(Debug, Clone, PartialEq)]
pub struct LovaszPoint<T> {
    pub value: T,
    pub subgradient: Vec<T>,
}

impl<'f, F> LovaszExtension<'f, F> {
    pub fn new(f: &'f F) -> Self {
        LovaszExtension { f }
    }

    fn chain<T: Scalar>(&self, x: &[T]) -> Result<(ChainPrefix, Vec<T>)>
    where
        F: SetFunction<T>,
    {
        let n = self.f.ground_size();
        if x.len() != n {
            return Err(Error::contract(format!(
                "point has dimension {} but the ground set has {n} elements",
                x.len()
            )));
        }
        if !in_unit_box(x) {
            return Err(Error::contract("point outside [0,1]^n"));
        }
        let chain = ChainPrefix::of(x);
        let values = self.f.chain_values(chain.order());
        Ok((chain, values))
    }

    pub fn evaluate<T: Scalar>(&self, x: &[T]) -> Result<T>
    where
        F: SetFunction<T>,
    {
        let (chain, values) = self.chain(x)?;
        Ok(lovasz_value(x, &chain, &values))
    }

    pub fn subgradient<T: Scalar>(&self, x: &[T]) -> Result<Vec<T>>
    where
        F: SetFunction<T>,
    {
        let (chain, values) = self.chain(x)?;
        Ok(chain_subgradient(&chain, &values))
    }

    pub fn evaluate_with_subgradient<T: Scalar>(&self, x: &[T]) -> Result<LovaszPoint<T>>
    where
        F: SetFunction<T>,
    {
        let (chain, values) = self.chain(x)?;
        Ok(LovaszPoint {
            value: lovasz_value(x, &chain, &values),
            subgradient: chain_subgradient(&chain, &values),
        })
    }
}

/// `f̂_{(G,v)}(x)`.
pub fn lovasz_eval<T: Scalar>(inst: &Instance<'_>, x: &FractionalPoint<T>) -> Result<T> {
    LovaszExtension::new(inst).evaluate(x.as_slice())
}

/// A subgradient of `f̂_{(G,v)}` at `x`.
pub fn lovasz_subgradient<T: Scalar>(inst: &Instance<'_>, x: &FractionalPoint<T>) -> Result<Vec<T>> {
    LovaszExtension::new(inst).subgradient(x.as_slice())
}
