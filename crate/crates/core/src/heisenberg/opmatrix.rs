use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::freealg::{Letter, NCPoly, RewriteSystem};
use crate::rmat::CMatrix;
use crate::scalars::Ring;

/// Square matrix with noncommutative polynomial entries. Products keep the
/// order of entry factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpMatrix<S> {
    dim: usize,
    entries: Vec<NCPoly<S>>,
}

impl<S: Ring> OpMatrix<S> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> NCPoly<S>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        OpMatrix { dim, entries }
    }

    /// Matrix of generators `f(i, j)`.
    pub fn letters(dim: usize, f: impl Fn(u8, u8) -> Letter) -> Self {
        Self::from_fn(dim, |r, c| NCPoly::letter(f(r as u8, c as u8)))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { NCPoly::one() } else { NCPoly::zero() })
    }

    pub fn from_cmatrix(m: &CMatrix<S>) -> Self {
        Self::from_fn(m.dim(), |r, c| NCPoly::constant(m.get(r, c).clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &NCPoly<S> {
        &self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[NCPoly<S>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(r, c).scale(k))
    }

    pub fn map(&self, mut f: impl FnMut(&NCPoly<S>) -> NCPoly<S>) -> Self {
        Self::from_fn(self.dim, |r, c| f(self.get(r, c)))
    }

    pub fn try_map(&self, mut f: impl FnMut(&NCPoly<S>) -> Result<NCPoly<S>>) -> Result<Self> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(OpMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn nf(&self, sys: &RewriteSystem<S>) -> Result<Self> {
        self.try_map(|p| sys.nf(p))
    }

    /// X (x) 1: (X^1)_{(ij),(kl)} = X_ik delta_jl.
    pub fn embed1(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n * n, |r, c| {
            let (i, j, k, l) = (r / n, r % n, c / n, c % n);
            if j == l {
                self.get(i, k).clone()
            } else {
                NCPoly::zero()
            }
        })
    }

    /// 1 (x) X: (X^2)_{(ij),(kl)} = delta_ik X_jl.
    pub fn embed2(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n * n, |r, c| {
            let (i, j, k, l) = (r / n, r % n, c / n, c % n);
            if i == k {
                self.get(j, l).clone()
            } else {
                NCPoly::zero()
            }
        })
    }

    /// First nonzero entry, as (row, col, entry).
    pub fn first_nonzero(&self) -> Option<(usize, usize, &NCPoly<S>)> {
        self.entries
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_zero())
            .map(|(k, p)| (k / self.dim, k % self.dim, p))
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).render()).collect())
            .collect()
    }
}

impl<S: Ring> Mul for &OpMatrix<S> {
    type Output = OpMatrix<S>;

    fn mul(self, rhs: Self) -> OpMatrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        OpMatrix::from_fn(n, |r, c| {
            let mut acc = NCPoly::zero();
            for k in 0..n {
                let (a, b) = (self.get(r, k), rhs.get(k, c));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        })
    }
}

impl<S: Ring> Add for &OpMatrix<S> {
    type Output = OpMatrix<S>;

    fn add(self, rhs: Self) -> OpMatrix<S> {
        OpMatrix::from_fn(self.dim, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl<S: Ring> Sub for &OpMatrix<S> {
    type Output = OpMatrix<S>;

    fn sub(self, rhs: Self) -> OpMatrix<S> {
        OpMatrix::from_fn(self.dim, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}
