//! Scalar abstraction for the soft-decision parts of the crate.
//!
//! Belief propagation messages and model evaluation are generic over the
//! float width; GF(2) algebra and the bit-packed samplers are binary by
//! nature and stay concrete.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + std::fmt::Debug + Send + Sync + 'static {
    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("f64 conversion")
    }
    fn to_f64_lossy(self) -> f64;
}

impl Real for f32 {
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn to_f64_lossy(self) -> f64 {
        self
    }
}
