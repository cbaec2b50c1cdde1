use num_traits::Zero;

use super::opmatrix::OpMatrix;
use crate::freealg::NCPoly;
use crate::rmat::CMatrix;
use crate::scalars::Ring;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Which generator matrix fills a slot of an exchange relation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum MatKind {
    G,
    OmPlus,
    OmMinus,
}

/// Exchange relation `R A^1 B^2 = B^2 A^1 R'` with `R' = R` or `R' = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct RelationSpec {
    pub id: &'static str,
    pub r: Sign,
    pub a: MatKind,
    pub b: MatKind,
    pub trailing_r: bool,
}

impl RelationSpec {
    const fn new(id: &'static str, r: Sign, a: MatKind, b: MatKind, trailing_r: bool) -> Self {
        RelationSpec {
            id,
            r,
            a,
            b,
            trailing_r,
        }
    }

    /// The ten matrix exchange relations of the algebra.
    pub fn catalog() -> Vec<RelationSpec> {
        use MatKind::*;
        use Sign::*;
        vec![
            Self::new("gg+", Plus, G, G, true),
            Self::new("gg-", Minus, G, G, true),
            Self::new("op-op+", Plus, OmPlus, OmPlus, true),
            Self::new("op-op-", Minus, OmPlus, OmPlus, true),
            Self::new("om-om+", Plus, OmMinus, OmMinus, true),
            Self::new("om-om-", Minus, OmMinus, OmMinus, true),
            Self::new("op-om", Plus, OmPlus, OmMinus, true),
            Self::new("om-op", Minus, OmMinus, OmPlus, true),
            Self::new("op-g", Plus, OmPlus, G, false),
            Self::new("om-g", Minus, OmMinus, G, false),
        ]
    }

    /// Relations among the Omega+- alone (the quantum enveloping part).
    pub fn is_uq(&self) -> bool {
        self.a != MatKind::G && self.b != MatKind::G
    }

    pub fn by_id(id: &str) -> Option<RelationSpec> {
        Self::catalog().into_iter().find(|s| s.id == id)
    }
}

/// The generator matrices and R-matrices a relation is expanded against.
pub struct Realization<'a, S> {
    pub g: &'a OpMatrix<S>,
    pub om_plus: &'a OpMatrix<S>,
    pub om_minus: &'a OpMatrix<S>,
    pub rplus: &'a CMatrix<S>,
    pub rminus: &'a CMatrix<S>,
}

impl<S: Ring> Realization<'_, S> {
    fn mat(&self, k: MatKind) -> &OpMatrix<S> {
        match k {
            MatKind::G => self.g,
            MatKind::OmPlus => self.om_plus,
            MatKind::OmMinus => self.om_minus,
        }
    }

    /// Residual matrix `R A^1 B^2 - B^2 A^1 R'`.
    pub fn residual(&self, spec: &RelationSpec) -> OpMatrix<S> {
        let r = OpMatrix::from_cmatrix(match spec.r {
            Sign::Plus => self.rplus,
            Sign::Minus => self.rminus,
        });
        let a1 = self.mat(spec.a).embed1();
        let b2 = self.mat(spec.b).embed2();
        let lhs = &(&r * &a1) * &b2;
        let rhs = &b2 * &a1;
        let rhs = if spec.trailing_r { &rhs * &r } else { rhs };
        &lhs - &rhs
    }
}

/// Entrywise relations of a matrix identity: nonzero entries of the residual,
/// made monic where the leading coefficient is a unit, without duplicates,
/// in deterministic order.
pub fn expand_matrix_relation<S: Ring>(spec: &RelationSpec, real: &Realization<'_, S>) -> Vec<NCPoly<S>> {
    residual_relations(&real.residual(spec))
}

pub fn residual_relations<S: Ring>(res: &OpMatrix<S>) -> Vec<NCPoly<S>> {
    let mut out: Vec<NCPoly<S>> = Vec::new();
    for p in res.entries() {
        if p.is_zero() {
            continue;
        }
        let p = monic(p);
        if !out.contains(&p) && !out.contains(&-p.clone()) {
            out.push(p);
        }
    }
    out.sort_by(|a, b| a.leading().map(|x| x.0).cmp(&b.leading().map(|x| x.0)).then_with(|| a.render().cmp(&b.render())));
    out
}

pub(crate) fn monic<S: Ring>(p: &NCPoly<S>) -> NCPoly<S> {
    match p.leading().and_then(|(_, c)| c.inv_unit().ok()) {
        Some(inv) => p.scale(&inv),
        None => p.clone(),
    }
}
