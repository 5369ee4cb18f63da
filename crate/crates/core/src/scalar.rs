use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the geometry and distance kernels are generic over.
///
/// Implemented for `f32` and `f64`; all library types default to `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute tolerance for geometric predicates (on-segment tests,
    /// free-space interval endpoints). 1e-9 for `f64`, widened for
    /// coarser types so it stays above machine noise.
    fn geom_tol() -> Self {
        let floor = Self::from_f64(1e-9).unwrap();
        let eps32 = Self::epsilon() * Self::from_u32(32).unwrap();
        if eps32 > floor {
            eps32
        } else {
            floor
        }
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Rounds to the nearest integer value, ties to even.
pub(crate) fn round_ties_even<F: Scalar>(x: F) -> F {
    let f = x.floor();
    let frac = x - f;
    if frac > F::half() {
        f + F::one()
    } else if frac < F::half() {
        f
    } else if (f * F::half()).fract() == F::zero() {
        f
    } else {
        f + F::one()
    }
}
