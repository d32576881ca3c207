//! Scalar abstraction: the filters are generic over the floating-point type.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::StandardNormal;

/// Real scalar usable throughout the library: `f32` or `f64`.
pub trait Scalar: RealField + Copy + FromPrimitive + ToPrimitive {
    /// Draw one standard normal variate from `rng`.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Convert an `f64` constant into this scalar type (rounding if lossy).
    fn cast(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 constant")
    }

    /// Default relative tolerance for symmetry and PSD checks.
    ///
    /// `1e-12` for `f64`; widened to a multiple of machine epsilon for
    /// types too coarse to resolve that.
    fn check_tol() -> Self {
        let nominal = Self::cast(1e-12);
        let floor = Self::default_epsilon() * Self::cast(32.0);
        if nominal > floor {
            nominal
        } else {
            floor
        }
    }
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
        rng.sample(StandardNormal)
    }
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f32 {
        rng.sample(StandardNormal)
    }
}
