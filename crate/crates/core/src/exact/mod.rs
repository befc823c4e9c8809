//! Exact arithmetic substrate: dense matrices and values in real quadratic
//! extensions with at most two independent square roots.

mod matrix;
mod quad;

pub use matrix::{mat_mul, Matrix};
pub use quad::{quad_roots, squarefree_decompose, QuadValue};

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Scalar types the algebra is generic over.
///
/// Exact instantiations are `BigInt` for counts and `BigRational` for
/// anything that divides. Machine integers and `Ratio<i64>` also satisfy the
/// bound and are used where the magnitudes are known to be small.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialOrd + Signed + FromPrimitive + Send + Sync + 'static
{
}

/// Converts a machine integer into any scalar. Every `Scalar` can represent
/// the small integers used as parameters here.
#[inline]
pub fn lift<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent i64 value")
}

/// Integer types whose `Ratio` is an exact [`Scalar`] field.
pub trait ExactInt:
    Integer + Clone + Debug + Display + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Clone
        + Debug
        + Display
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
