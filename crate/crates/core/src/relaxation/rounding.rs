use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::projection::{in_unit_box, FractionalPoint};
use crate::centrality::Instance;
use crate::digraph::EdgeSubset;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_alpha<T: Scalar>(alpha: T) -> Result<()> {
    if alpha > T::zero() && alpha < T::one() {
        Ok(())
    } else {
        Err(Error::contract(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

/// `p = α + (1 - α) U` with `U` uniform on `[0, 1)`.
pub fn draw_threshold<T: Scalar, R: Rng + ?Sized>(alpha: T, rng: &mut R) -> T {
    let u: f64 = rng.gen();
    alpha + (T::one() - alpha) * T::lit(u)
}

/// Positions `e` with `x_e ≥ p`.
pub fn threshold_positions<T: Scalar>(x: &[T], p: T) -> Vec<usize> {
    x.iter()
        .enumerate()
        .filter_map(|(e, &v)| (v >= p).then_some(e))
        .collect()
}

/// One rounding draw; the threshold comes from a ChaCha8 stream seeded with
/// `seed`. Returns the kept positions and the threshold.
pub fn round_positions<T: Scalar>(x: &FractionalPoint<T>, alpha: T, seed: u64) -> Result<(Vec<usize>, T)> {
    check_alpha(alpha)?;
    if !in_unit_box(x.as_slice()) {
        return Err(Error::contract("rounding needs a point in [0,1]^n"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = draw_threshold(alpha, &mut rng);
    Ok((threshold_positions(x.as_slice(), p), p))
}

/// Threshold rounding of `x` into a subset of `ρ(v)`.
pub fn round_solution<T: Scalar>(
    inst: &Instance<'_>,
    x: &FractionalPoint<T>,
    alpha: T,
    seed: u64,
) -> Result<EdgeSubset> {
    if x.len() != inst.in_degree() {
        return Err(Error::contract("point dimension differs from in-degree"));
    }
    let (positions, _) = round_positions(x, alpha, seed)?;
    EdgeSubset::from_positions(inst.graph(), inst.target(), positions)
}

/// `draws` independent roundings; draw `i` uses seed `seed + i`, so it equals
/// `round_solution(…, seed + i)`.
pub fn rounding_draws<T: Scalar>(
    inst: &Instance<'_>,
    x: &FractionalPoint<T>,
    alpha: T,
    seed: u64,
    draws: usize,
) -> Result<Vec<EdgeSubset>> {
    (0..draws as u64)
        .map(|i| round_solution(inst, x, alpha, seed.wrapping_add(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_points_round_to_themselves() {
        let x = FractionalPoint::<f64>::indicator(4, [0, 2]);
        for seed in 0..100 {
            assert_eq!(round_positions(&x, 0.3, seed).unwrap().0, vec![0, 2]);
        }
        let zero = FractionalPoint::<f64>::zeros(3);
        for seed in 0..100 {
            assert!(round_positions(&zero, 0.7, seed).unwrap().0.is_empty());
        }
    }

    #[test]
    fn threshold_semantics() {
        let x = [0.9, 0.6, 0.2];
        assert_eq!(threshold_positions(&x, 0.75), vec![0]);
        assert_eq!(threshold_positions(&x, 0.6), vec![0, 1]);
        let x = FractionalPoint::new(x.to_vec());
        for seed in 0..200 {
            let (kept, p) = round_positions(&x, 0.5, seed).unwrap();
            assert!((0.5..1.0).contains(&p));
            let expect: Vec<usize> = match p {
                p if p > 0.9 => vec![],
                p if p > 0.6 => vec![0],
                _ => vec![0, 1],
            };
            assert_eq!(kept, expect);
        }
    }

    #[test]
    fn alpha_must_be_open_unit() {
        let x = FractionalPoint::<f64>::zeros(2);
        assert!(round_positions(&x, 0.0, 1).is_err());
        assert!(round_positions(&x, 1.0, 1).is_err());
        assert!(round_positions(&FractionalPoint::new(vec![1.5]), 0.5, 1).is_err());
    }

    #[test]
    fn seeded_draws_repeat() {
        let x = FractionalPoint::new(vec![0.8, 0.55, 0.95]);
        assert_eq!(
            round_positions(&x, 0.5, 9).unwrap(),
            round_positions(&x, 0.5, 9).unwrap()
        );
    }
}
