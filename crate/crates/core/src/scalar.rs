//! Scalar abstraction over the floating-point types the solvers run on.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rand::Rng;
use serde::{de::DeserializeOwned, Serialize};

/// Floating-point scalar usable throughout the library: `f32` or `f64`.
///
/// Everything numeric (matrices, problems, oracles, solvers) is generic over
/// this trait; concrete `f64` aliases live at the crate root.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Display
    + LowerExp
    + Debug
    + Default
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Uniform sample from `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Parse from a decimal/scientific literal, as found in Matrix Market files.
    fn parse_str(s: &str) -> Option<Self>;

    /// Conversion from an `f64` constant known to be representable
    /// (tolerances, step-size literals).
    fn cst(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Uniform sample from `[lo, hi)`.
    fn uniform_in<R: Rng + ?Sized>(rng: &mut R, lo: Self, hi: Self) -> Self {
        lo + (hi - lo) * Self::unit_uniform(rng)
    }
}

impl Scalar for f64 {
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f64>()
    }

    fn parse_str(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl Scalar for f32 {
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f32>()
    }

    fn parse_str(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

/// Euclidean norm of a slice.
pub fn norm2<T: Scalar>(v: &[T]) -> T {
    v.iter().map(|&x| x * x).fold(T::zero(), |a, b| a + b).sqrt()
}

/// Euclidean distance between two slices of equal length.
pub fn dist2<T: Scalar>(u: &[T], v: &[T]) -> T {
    debug_assert_eq!(u.len(), v.len());
    u.iter()
        .zip(v)
        .map(|(&a, &b)| (a - b) * (a - b))
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

/// Dot product of two slices of equal length.
pub fn dot<T: Scalar>(u: &[T], v: &[T]) -> T {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(&a, &b)| a * b).fold(T::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_and_dots() {
        let u = [3.0f64, 4.0];
        assert_eq!(norm2(&u), 5.0);
        assert_eq!(dot(&u, &[1.0, 2.0]), 11.0);
        assert_eq!(dist2(&u, &[3.0, 0.0]), 4.0);
    }

    #[test]
    fn unit_uniform_in_range() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let v = f64::unit_uniform(&mut rng);
            assert!((0.0..1.0).contains(&v));
            let w = f32::uniform_in(&mut rng, -1.0, 1.0);
            assert!((-1.0..1.0).contains(&w));
        }
    }
}
