//! Scalar abstraction: the numerical core is generic over `f32`/`f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the library is written against.
pub trait Real: Float + FromPrimitive + Debug + Display + 'static {}

impl Real for f32 {}
impl Real for f64 {}

/// Lift an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant must be representable")
}

/// Lossy view of a scalar as `f64`, for diagnostics and serialization.
#[inline]
pub(crate) fn as_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
