//! Scalar abstraction over the floating-point type used by the whole crate.
//!
//! All numerical code is generic over [`Scalar`] so the same algorithms run
//! in `f32` or `f64`. The crate root exports `f64` aliases for the common
//! case; the experiment harness and CLI pin `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

/// Floating-point scalar with the sampling primitives the agents need.
///
/// The three sampling methods centralize every `rand_distr` bound in one
/// place, so downstream code only ever writes `S: Scalar`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` constant. Panics only if the target type cannot
    /// represent any finite `f64`, which holds for neither `f32` nor `f64`.
    fn cast(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 constant")
    }

    /// One draw from N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from the uniform distribution on [0, 1).
    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from Gamma(shape, 1).
    fn standard_gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self) -> Self;
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random()
    }

    fn standard_gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self) -> Self {
        Gamma::new(shape, 1.0).expect("positive gamma shape").sample(rng)
    }
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random()
    }

    fn standard_gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self) -> Self {
        Gamma::new(shape, 1.0).expect("positive gamma shape").sample(rng)
    }
}

/// Dot product of two equal-length slices.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Euclidean norm of a slice.
pub fn norm2<S: Scalar>(a: &[S]) -> S {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn cast_round_trips_constants() {
        assert_eq!(<f64 as Scalar>::cast(1e-12), 1e-12);
        assert!((<f32 as Scalar>::cast(0.25) - 0.25f32).abs() == 0.0);
    }

    #[test]
    fn gamma_draws_are_positive() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..100 {
            assert!(f64::standard_gamma(&mut rng, 1.0) > 0.0);
            assert!(f64::standard_gamma(&mut rng, 0.5) >= 0.0);
        }
    }

    #[test]
    fn dot_and_norm() {
        assert_eq!(dot(&[1.0, 2.0], &[3.0, 4.0]), 11.0);
        assert_eq!(norm2(&[3.0, 4.0]), 5.0);
    }
}
