//! Scalar abstraction for the geometric side of the crate.
//!
//! All geometry (points, paths, planners) is generic over a floating point
//! scalar so that the same planner code runs in `f32` or `f64`. Exact
//! coefficient arithmetic for cohomology lives in [`crate::cohomology::coeff`]
//! and is deliberately separate.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for pulling an `f64` literal into the generic scalar type.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

/// Default tolerance for point-equality and stratum-membership decisions.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Tolerance for structural invariants (unit norms, involutions).
pub const STRICT_TOL: f64 = 1e-12;
