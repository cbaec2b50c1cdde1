//! Numeric R-matrices over the scalar ring: construction, inverses, and the
//! Yang-Baxter and Hecke checks.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{QRing, Ring};

/// Square matrix with scalar entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Ring> CMatrix<S> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        CMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| S::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(r, c).clone() * k.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    /// Kronecker product; index of e_i (x) e_j is i * dim(b) + j.
    pub fn kron(&self, b: &Self) -> Self {
        let m = b.dim;
        Self::from_fn(self.dim * m, |r, c| {
            self.get(r / m, c / m).clone() * b.get(r % m, c % m).clone()
        })
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, S)> {
        for r in 0..self.dim {
            for c in 0..self.dim {
                let d = self.get(r, c).clone() - other.get(r, c).clone();
                if !d.is_zero() {
                    return Some((r, c, d));
                }
            }
        }
        None
    }

    /// Gauss-Jordan elimination with unit pivots.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let (prow, pinv) = (col..n)
                .find_map(|r| a.get(r, col).inv_unit().ok().map(|i| (r, i)))
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(col, prow);
            inv.swap_rows(col, prow);
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                a.sub_row_multiple(r, col, &f);
                inv.sub_row_multiple(r, col, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.dim {
            self.entries.swap(i * self.dim + c, j * self.dim + c);
        }
    }

    fn scale_row(&mut self, i: usize, k: &S) {
        for c in 0..self.dim {
            let v = self.get(i, c).clone() * k.clone();
            self.set(i, c, v);
        }
    }

    fn sub_row_multiple(&mut self, target: usize, src: usize, f: &S) {
        for c in 0..self.dim {
            let v = self.get(target, c).clone() - f.clone() * self.get(src, c).clone();
            self.set(target, c, v);
        }
    }

    /// Row-major nested renderings, the JSON form of a matrix.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).render()).collect())
            .collect()
    }
}

impl<S: Ring> Mul for &CMatrix<S> {
    type Output = CMatrix<S>;

    fn mul(self, rhs: Self) -> CMatrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = CMatrix::<S>::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl<S: Ring> Add for &CMatrix<S> {
    type Output = CMatrix<S>;

    fn add(self, rhs: Self) -> CMatrix<S> {
        CMatrix::from_fn(self.dim, |r, c| self.get(r, c).clone() + rhs.get(r, c).clone())
    }
}

impl<S: Ring> Sub for &CMatrix<S> {
    type Output = CMatrix<S>;

    fn sub(self, rhs: Self) -> CMatrix<S> {
        CMatrix::from_fn(self.dim, |r, c| self.get(r, c).clone() - rhs.get(r, c).clone())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadDimension(format!("n = {n}, need n >= 2")));
    }
    Ok(())
}

/// Flip operator on C^n (x) C^n.
pub fn build_p<S: Ring>(n: usize) -> Result<CMatrix<S>> {
    check_n(n)?;
    Ok(CMatrix::from_fn(n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        if c == j * n + i {
            S::one()
        } else {
            S::zero()
        }
    }))
}

/// q^(-1/n) (q sum e_ii (x) e_ii + sum_{i != j} e_ii (x) e_jj + lambda sum_{i<j} e_ij (x) e_ji)
pub fn build_rplus<S: QRing>(n: usize) -> Result<CMatrix<S>> {
    check_n(n)?;
    let norm = S::q_pow(-1, n as i64);
    Ok(CMatrix::from_fn(n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        let (k, l) = (c / n, c % n);
        let v = if (i, j) == (k, l) {
            if i == j {
                S::q()
            } else {
                S::one()
            }
        } else if i < j && (k, l) == (j, i) {
            S::lambda()
        } else {
            S::zero()
        };
        v * norm.clone()
    }))
}

/// R- = P R+^-1 P.
pub fn build_rminus<S: QRing>(n: usize) -> Result<CMatrix<S>> {
    let p = build_p::<S>(n)?;
    let inv = build_rplus::<S>(n)?.inverse()?;
    Ok(&(&p * &inv) * &p)
}

/// Side length n of an n^2 x n^2 matrix.
fn factor_dim<S: Ring>(r: &CMatrix<S>) -> Result<usize> {
    let d = r.dim();
    let n = (1..=d).find(|n| n * n >= d).unwrap_or(0);
    if n * n != d || n < 2 {
        return Err(Error::BadDimension(format!(
            "{d} x {d} is not n^2 x n^2 for n >= 2"
        )));
    }
    Ok(n)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct YangBaxterReport {
    pub n: usize,
    pub holds: bool,
    /// First differing entry of R12 R13 R23 - R23 R13 R12, as (row, col, value).
    pub witness: Option<(usize, usize, String)>,
}

/// R12 R13 R23 = R23 R13 R12 on (C^n)^(x3).
pub fn check_yang_baxter<S: Ring>(r: &CMatrix<S>) -> Result<YangBaxterReport> {
    let n = factor_dim(r)?;
    let id = CMatrix::<S>::identity(n);
    let p = CMatrix::from_fn(n * n, |row, c| {
        let (i, j) = (row / n, row % n);
        if c == j * n + i {
            S::one()
        } else {
            S::zero()
        }
    });
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let p23 = id.kron(&p);
    let r13 = &(&p23 * &r12) * &p23;
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    let witness = lhs
        .first_difference(&rhs)
        .map(|(a, b, v)| (a, b, v.render()));
    Ok(YangBaxterReport {
        n,
        holds: witness.is_none(),
        witness,
    })
}

/// Quadratic relation (PR)^2 = alpha PR + beta, with roots when they split
/// into monomials: (PR - mu1)(PR - mu2) = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeRelation<S> {
    pub alpha: S,
    pub beta: S,
    pub roots: Option<(S, S)>,
}

pub fn check_hecke<S: QRing>(r: &CMatrix<S>) -> Result<HeckeRelation<S>> {
    let n = factor_dim(r)?;
    let p = build_p::<S>(n)?;
    let m = &p * r;
    let m2 = &m * &m;
    let d = m.dim();
    let off = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .find_map(|(i, j)| m.get(i, j).inv_unit().ok().map(|inv| (i, j, inv)));
    let (alpha, beta) = match off {
        Some((i, j, inv)) => {
            let alpha = m2.get(i, j).clone() * inv;
            let beta = m2.get(0, 0).clone() - alpha.clone() * m.get(0, 0).clone();
            (alpha, beta)
        }
        None => {
            return Err(Error::NoQuadraticRelation(
                "PR has no invertible off-diagonal entry".into(),
            ))
        }
    };
    let fitted = &m.scale(&alpha) + &CMatrix::identity(d).scale(&beta);
    if fitted != m2 {
        return Err(Error::NoQuadraticRelation(
            "(PR)^2 is not in the span of PR and 1".into(),
        ));
    }
    let roots = split_roots(&alpha, &beta);
    Ok(HeckeRelation { alpha, beta, roots })
}

/// Roots of x^2 - alpha x - beta when both are monomials found among the
/// terms of alpha or, for alpha = 0, as +-sqrt(beta) with beta = q^(2e).
fn split_roots<S: QRing>(alpha: &S, beta: &S) -> Option<(S, S)> {
    let check = |a: &S, b: &S| (a.clone() + b.clone() == *alpha) && (a.clone() * b.clone() == -beta.clone());
    if alpha.is_zero() {
        for (num, den) in [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1)] {
            let c = S::q_pow(num, den);
            if check(&c, &(-c.clone())) {
                return Some((c.clone(), -c));
            }
        }
        return None;
    }
    let terms = alpha.split_terms();
    match terms.as_slice() {
        [a, b] if check(a, b) => Some((a.clone(), b.clone())),
        [a] if check(a, &S::zero()) => Some((a.clone(), S::zero())),
        _ => None,
    }
}
