use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Q(i), the coefficient field used throughout the engine.
pub type GaussianRational = Complex<BigRational>;

/// Exact coefficient field of the Laurent tier.
///
/// Only exact fields are meaningful here: every certificate in the crate is
/// an exact zero test.
pub trait Coefficient:
    Clone
    + PartialEq
    + Eq
    + Hash
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
    /// Complex conjugation (identity on real fields).
    fn conj(&self) -> Self;
    fn try_inv(&self) -> Option<Self>;
    fn from_ratio(r: BigRational) -> Self;
    fn imaginary_unit() -> Option<Self>;
    /// Renders as `a`, `a/b`, `a/b*i`, or `(a/b+c/d*i)`.
    fn render(&self) -> String;
}

pub(crate) fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_imag(r: &BigRational) -> String {
    if r.is_one() {
        "i".to_string()
    } else if (-r).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", render_rational(r))
    }
}

impl Coefficient for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_ratio(r: BigRational) -> Self {
        r
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn render(&self) -> String {
        render_rational(self)
    }
}

impl Coefficient for GaussianRational {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn try_inv(&self) -> Option<Self> {
        let norm = self.norm_sqr();
        if norm.is_zero() {
            None
        } else {
            Some(Complex::new(&self.re / &norm, -(&self.im / &norm)))
        }
    }

    fn from_ratio(r: BigRational) -> Self {
        Complex::new(r, BigRational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(BigRational::zero(), BigRational::one()))
    }

    fn render(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => render_rational(&self.re),
            (true, false) => render_imag(&self.im),
            (false, false) => {
                let im = if self.im.is_negative() {
                    format!("-{}", render_imag(&-&self.im))
                } else {
                    format!("+{}", render_imag(&self.im))
                };
                format!("({}{})", render_rational(&self.re), im)
            }
        }
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        Complex::new(ratio(re.0, re.1), ratio(im.0, im.1))
    }

    #[test]
    fn renders() {
        assert_eq!(g((3, 4), (0, 1)).render(), "3/4");
        assert_eq!(g((0, 1), (-1, 2)).render(), "-1/2*i");
        assert_eq!(g((0, 1), (1, 1)).render(), "i");
        assert_eq!(g((1, 1), (-2, 1)).render(), "(1-2*i)");
        assert_eq!(g((-1, 3), (1, 1)).render(), "(-1/3+i)");
    }

    #[test]
    fn gaussian_inverse() {
        let z = g((1, 1), (2, 1));
        assert_eq!(z.clone() * z.try_inv().unwrap(), GaussianRational::one());
        assert!(GaussianRational::zero().try_inv().is_none());
    }
}
