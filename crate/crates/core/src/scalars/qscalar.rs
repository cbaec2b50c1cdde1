use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeff::{ratio, Coefficient};
use super::laurent::{Exp, Laurent};
use super::{QRing, Ring};
use crate::error::{Error, Result};

/// Laurent polynomial in q^(1/2) localized at lambda = q - 1/q.
///
/// Stored as `num / lambda^den`; when `den > 0` lambda does not divide `num`,
/// so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QScalar<C> {
    num: Laurent<C>,
    den: u32,
}

impl<C: Coefficient> QScalar<C> {
    pub fn new(num: Laurent<C>, den: u32) -> Self {
        let mut s = QScalar { num, den };
        s.normalize();
        s
    }

    pub fn from_laurent(num: Laurent<C>) -> Self {
        QScalar { num, den: 0 }
    }

    pub fn from_coeff(c: C) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    pub fn numerator(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn lambda_power(&self) -> u32 {
        self.den
    }

    /// `Some(c)` when the value is the constant `c`.
    pub fn as_constant(&self) -> Option<C> {
        if self.den != 0 {
            return None;
        }
        if self.num.is_zero() {
            return Some(C::zero());
        }
        match self.num.single_term() {
            Some((e, c)) if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = 0;
            return;
        }
        while self.den > 0 {
            match self.num.div_lambda() {
                Some(m) => {
                    self.num = m;
                    self.den -= 1;
                }
                None => break,
            }
        }
    }

    fn lift(&self, den: u32) -> Laurent<C> {
        let mut n = self.num.clone();
        let l = Laurent::lambda();
        for _ in self.den..den {
            n = &n * &l;
        }
        n
    }
}

impl<C: Coefficient> Zero for QScalar<C> {
    fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Coefficient> One for QScalar<C> {
    fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }
}

impl<C: Coefficient> Add for QScalar<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coefficient> Add for &QScalar<C> {
    type Output = QScalar<C>;

    fn add(self, rhs: Self) -> QScalar<C> {
        if self.den == rhs.den {
            return QScalar::new(self.num.clone() + rhs.num.clone(), self.den);
        }
        let d = self.den.max(rhs.den);
        QScalar::new(self.lift(d) + rhs.lift(d), d)
    }
}

impl<C: Coefficient> Sub for QScalar<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        &self + &(-rhs)
    }
}

impl<C: Coefficient> Neg for QScalar<C> {
    type Output = Self;

    fn neg(self) -> Self {
        QScalar {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<C: Coefficient> Mul for QScalar<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coefficient> Mul for &QScalar<C> {
    type Output = QScalar<C>;

    fn mul(self, rhs: Self) -> QScalar<C> {
        let num = &self.num * &rhs.num;
        if self.den + rhs.den == 0 {
            return QScalar::from_laurent(num);
        }
        QScalar::new(num, self.den + rhs.den)
    }
}

impl<C: Coefficient> Ring for QScalar<C> {
    fn conj(&self) -> Self {
        // conj(lambda) = -lambda
        let num = self.num.conj();
        let num = if self.den % 2 == 1 { -num } else { num };
        QScalar { num, den: self.den }
    }

    fn inv_unit(&self) -> Result<Self> {
        let mut num = self.num.clone();
        let mut k = 0u32;
        if self.den == 0 {
            while let Some(m) = num.div_lambda() {
                num = m;
                k += 1;
            }
        }
        let (e, c) = num
            .single_term()
            .ok_or_else(|| Error::NotAUnit(self.render()))?;
        let ci = c.try_inv().ok_or_else(|| Error::NotAUnit(self.render()))?;
        let inv = QScalar::from_laurent(Laurent::monomial(ci, -*e));
        let mut out = inv;
        for _ in 0..self.den {
            out = &out * &QScalar::lambda();
        }
        Ok(QScalar::new(out.num, out.den + k))
    }

    fn render(&self) -> String {
        let n = self.num.render();
        match self.den {
            0 => n,
            d => {
                let lam = if d == 1 {
                    "lambda^(-1)".to_string()
                } else {
                    format!("lambda^(-{d})")
                };
                if n == "1" {
                    lam
                } else if n == "-1" {
                    format!("-{lam}")
                } else if self.num.len() == 1 && !n.starts_with('(') {
                    format!("{n}*{lam}")
                } else {
                    format!("({n})*{lam}")
                }
            }
        }
    }

    fn is_atomic(&self) -> bool {
        self.num.len() <= 1
    }
}

impl<C: Coefficient> QRing for QScalar<C> {
    fn q_pow(num: i64, den: i64) -> Self {
        QScalar::from_laurent(Laurent::monomial(C::one(), Exp::new(num, den)))
    }

    fn lambda() -> Self {
        QScalar::from_laurent(Laurent::lambda())
    }

    fn from_int(v: i64) -> Self {
        Self::from_rational(&ratio(v, 1))
    }

    fn from_rational(r: &BigRational) -> Self {
        QScalar::from_coeff(C::from_ratio(r.clone()))
    }

    fn imaginary_unit() -> Option<Self> {
        C::imaginary_unit().map(QScalar::from_coeff)
    }

    fn split_terms(&self) -> Vec<Self> {
        self.num
            .terms()
            .rev()
            .map(|(e, c)| QScalar::new(Laurent::monomial(c.clone(), *e), self.den))
            .collect()
    }
}

impl<C: Coefficient> fmt::Display for QScalar<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
