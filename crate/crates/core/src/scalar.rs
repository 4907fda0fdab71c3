//! Scalar abstraction shared by every transform.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating-point scalar the transforms are generic over (`f32`, `f64`).
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts a count or index. Exact for every value below 2^24 (`f32`) or 2^53 (`f64`).
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable in every float type")
    }

    /// Converts a literal constant.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal is representable")
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}
