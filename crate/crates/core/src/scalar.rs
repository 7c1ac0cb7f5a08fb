//! Scalar abstraction: every numeric routine in this crate is generic over a
//! floating-point element type. The reference pipeline instantiates `f64`
//! (fine enough for finite-difference gradient checks); `f32` is available
//! for storage-sensitive experiments.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Element type accepted by tensors and all numeric operations.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Lift an `f64` constant into the scalar type.
#[inline]
pub fn cast<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant must convert into the scalar type")
}

/// Round to nearest integer, ties to even (banker's rounding).
///
/// `Float::round` rounds ties away from zero, which biases quantization
/// grids; this variant is used everywhere a `round` appears in the
/// quantizer.
#[inline]
pub fn round_ties_even<T: Scalar>(x: T) -> T {
    let floor = x.floor();
    let frac = x - floor;
    let half = cast::<T>(0.5);
    if frac > half {
        floor + T::one()
    } else if frac < half {
        floor
    } else {
        // Exact tie: pick the even neighbour. `floor * 0.5` is exact
        // (power-of-two scaling), so the parity test is safe.
        let halved = (floor * half).floor() * cast::<T>(2.0);
        if halved == floor {
            floor
        } else {
            floor + T::one()
        }
    }
}
