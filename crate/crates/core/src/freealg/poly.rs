use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::word::{Letter, Word};
use crate::scalars::Ring;

/// Element of the free associative algebra: finite map word -> coefficient.
///
/// Keys are kept in deg-lex order, so the leading monomial is the last key.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Ring> NCPoly<S> {
    pub fn constant(c: S) -> Self {
        Self::monomial(c, Word::empty())
    }

    pub fn letter(l: Letter) -> Self {
        Self::monomial(S::one(), Word(vec![l]))
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(S::one(), w)
    }

    pub fn monomial(c: S, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Word, &S)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Word, S)> {
        self.terms.pop_last()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        self.terms
            .keys()
            .flat_map(|w| w.0.iter().copied())
            .collect()
    }

    /// Coefficientwise map of letters to polynomials (a substitution).
    pub fn substitute<F>(&self, mut f: F) -> Self
    where
        F: FnMut(Letter) -> Option<NCPoly<S>>,
    {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::constant(c.clone());
            for &l in w.letters() {
                let img = f(l).unwrap_or_else(|| NCPoly::letter(l));
                acc = &acc * &img;
            }
            out = out + acc;
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let t = render_term(c, w);
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

fn render_term<S: Ring>(c: &S, w: &Word) -> String {
    if w.is_empty() {
        let r = c.render();
        return if c.is_atomic() { r } else { format!("({r})") };
    }
    if c.is_one() {
        return w.render();
    }
    if (-c.clone()).is_one() {
        return format!("-{}", w.render());
    }
    let r = c.render();
    if c.is_atomic() {
        format!("{r}*{w}")
    } else {
        format!("({r})*{w}")
    }
}

impl<S: Ring> Zero for NCPoly<S> {
    fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Ring> One for NCPoly<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Ring> Add for NCPoly<S> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<S: Ring> Add for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn add(self, rhs: Self) -> NCPoly<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Ring> Sub for NCPoly<S> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl<S: Ring> Sub for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn sub(self, rhs: Self) -> NCPoly<S> {
        self.clone() - rhs.clone()
    }
}

impl<S: Ring> Neg for NCPoly<S> {
    type Output = Self;

    fn neg(self) -> Self {
        NCPoly {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<S: Ring> Mul for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn mul(self, rhs: Self) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(
                    Word::concat(&[w1.letters(), w2.letters()]),
                    c1.clone() * c2.clone(),
                );
            }
        }
        out
    }
}

impl<S: Ring> Mul for NCPoly<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<S: Ring> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
