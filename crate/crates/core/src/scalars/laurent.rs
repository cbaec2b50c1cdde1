use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::coeff::{render_rational, Coefficient};

/// Exponent of q. For the sl2 engine these are half-integers; the general-N
/// R-matrix normalization needs thirds as well.
pub type Exp = Ratio<i64>;

/// Finite sum of `c * q^e` with rational exponents `e`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<C> {
    terms: BTreeMap<Exp, C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn monomial(c: C, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, Exp::zero())
    }

    /// q - q^-1
    pub fn lambda() -> Self {
        let mut l = Self::monomial(C::one(), Exp::one());
        l.add_term(Exp::from_integer(-1), -C::one());
        l
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn single_term(&self) -> Option<(&Exp, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn coeff(&self, e: &Exp) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, e: Exp, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// q -> 1/q on exponents, conjugation on coefficients.
    pub fn conj(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.conj())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone() * k.clone());
        }
        out
    }

    /// Exact division by lambda; `None` when lambda does not divide.
    pub fn div_lambda(&self) -> Option<Self> {
        let lowest = *self.terms.keys().next()?;
        let mut rem = self.terms.clone();
        let mut quo = BTreeMap::new();
        let two = Exp::from_integer(2);
        while let Some((e, c)) = rem.pop_last() {
            let lo = e - two;
            if lo < lowest {
                return None;
            }
            quo.insert(e - Exp::one(), c.clone());
            let entry = rem.remove(&lo).unwrap_or_else(C::zero) + c;
            if !entry.is_zero() {
                rem.insert(lo, entry);
            }
        }
        Some(Laurent { terms: quo })
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let t = render_term(c, e);
            if k == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

pub(crate) fn render_exp(e: &Exp) -> String {
    let r = num_rational::BigRational::new((*e.numer()).into(), (*e.denom()).into());
    if e.is_integer() && e.is_positive() {
        if e.is_one() {
            String::new()
        } else {
            format!("^{}", e.numer())
        }
    } else {
        format!("^({})", render_rational(&r))
    }
}

fn render_term<C: Coefficient>(c: &C, e: &Exp) -> String {
    if e.is_zero() {
        return c.render();
    }
    let qpart = format!("q{}", render_exp(e));
    if c.is_one() {
        qpart
    } else if (-c.clone()).is_one() {
        format!("-{qpart}")
    } else {
        format!("{}*{qpart}", c.render())
    }
}

impl<C: Coefficient> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Laurent<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;

    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type L = Laurent<BigRational>;

    fn q(e: i64, d: i64) -> L {
        L::monomial(BigRational::one(), Exp::new(e, d))
    }

    #[test]
    fn lambda_division_roundtrip() {
        let m = q(3, 2) + q(-1, 2) * L::constant(BigRational::from_integer(5.into())) + L::one();
        let n = &m * &L::lambda();
        assert_eq!(n.div_lambda().unwrap(), m);
        assert!(m.div_lambda().is_none());
        assert!((L::one() + q(1, 1)).div_lambda().is_none());
    }

    #[test]
    fn render_half_exponents() {
        let x = q(-1, 2) - q(3, 2);
        assert_eq!(x.render(), "-q^(3/2) + q^(-1/2)");
        assert_eq!(q(1, 1).render(), "q");
        assert_eq!(q(2, 1).render(), "q^2");
        assert_eq!(q(-1, 1).render(), "q^(-1)");
    }
}
