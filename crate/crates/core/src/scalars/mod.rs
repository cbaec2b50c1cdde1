//! Exact scalars: Laurent polynomials in q^(1/2) over Q(i), with lambda inverted.

mod coeff;
mod laurent;
mod qscalar;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use coeff::{Coefficient, GaussianRational};
pub use laurent::{Exp, Laurent};
pub use qscalar::QScalar;

use crate::error::Result;

/// Scalar ring the noncommutative layer is generic over.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Antilinear involution: q -> 1/q and i -> -i.
    fn conj(&self) -> Self;
    fn inv_unit(&self) -> Result<Self>;
    fn render(&self) -> String;
    /// True when `render` is a single signed factor that needs no parentheses.
    fn is_atomic(&self) -> bool;
}

/// Rings that contain q, its fractional powers and 1/lambda.
pub trait QRing: Ring {
    /// q^(num/den)
    fn q_pow(num: i64, den: i64) -> Self;
    fn lambda() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn imaginary_unit() -> Option<Self>;
    /// Monomial summands, highest power of q first.
    fn split_terms(&self) -> Vec<Self>;

    fn q() -> Self {
        Self::q_pow(1, 1)
    }

    /// q^(1/2)
    fn s() -> Self {
        Self::q_pow(1, 2)
    }
}
