use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating point scalar used by every numeric routine: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as float")
    }

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable as float")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
