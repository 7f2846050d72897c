//! Scalar abstraction for the numeric core.

use std::fmt;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the crate is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Converts an `f64` literal (tolerances, task parameters, RNG output).
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal not representable")
    }

    /// Widens to `f64` for reports and serialization.
    fn as_f64(self) -> f64;
}

impl Scalar for f32 {
    fn as_f64(self) -> f64 {
        f64::from(self)
    }
}

impl Scalar for f64 {
    fn as_f64(self) -> f64 {
        self
    }
}
