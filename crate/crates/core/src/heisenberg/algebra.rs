use num_traits::{One, Zero};

use super::opmatrix::OpMatrix;
use super::relations::{expand_matrix_relation, Realization, RelationSpec};
use crate::error::{Error, Result};
use crate::freealg::{assemble, unresolved_pairs, Letter, NCPoly, RewriteSystem, Word};
use crate::rmat::{build_rminus, build_rplus, CMatrix};
use crate::scalars::QRing;

/// A relation together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledRelation<S> {
    pub id: String,
    pub poly: NCPoly<S>,
}

/// The sl2 Heisenberg double: generators, extracted relations, the rewriting
/// systems they assemble into, and the derived matrices.
#[derive(Clone, Debug)]
pub struct Heisenberg<S> {
    pub rplus: CMatrix<S>,
    pub rminus: CMatrix<S>,
    pub g: OpMatrix<S>,
    pub om_plus: OpMatrix<S>,
    pub om_minus: OpMatrix<S>,
    relations: Vec<LabeledRelation<S>>,
    /// Full system including det_q(g) = 1.
    system: RewriteSystem<S>,
    /// Same relations without the determinant condition.
    presentation: RewriteSystem<S>,
    /// Inverse pair and Omega-Omega relations only.
    uq: RewriteSystem<S>,
    pub g_inv: OpMatrix<S>,
    pub om_plus_inv: OpMatrix<S>,
    pub om_minus_inv: OpMatrix<S>,
    /// Omega = Omega+ Omega-^-1, in normal form.
    pub omega: OpMatrix<S>,
    /// Sigma = g^-1 Omega g, in normal form.
    pub sigma: OpMatrix<S>,
}

pub(crate) fn letter_matrix<S: QRing>(f: fn(u8, u8) -> Letter) -> OpMatrix<S> {
    OpMatrix::letters(2, f)
}

fn l<S: QRing>(x: Letter) -> NCPoly<S> {
    NCPoly::letter(x)
}

/// Omega+ = [[K^-1, q^(-1/2) lambda Xp], [0, K]]
pub fn sl2_om_plus<S: QRing>() -> OpMatrix<S> {
    let c = S::q_pow(-1, 2) * S::lambda();
    let e = [
        l(Letter::Kinv),
        l(Letter::Xp).scale(&c),
        NCPoly::zero(),
        l(Letter::K),
    ];
    OpMatrix::from_fn(2, |r, k| e[2 * r + k].clone())
}

/// Omega- = [[K, 0], [-q^(1/2) lambda Xm, K^-1]]
pub fn sl2_om_minus<S: QRing>() -> OpMatrix<S> {
    let c = -(S::q_pow(1, 2) * S::lambda());
    let e = [
        l(Letter::K),
        NCPoly::zero(),
        l(Letter::Xm).scale(&c),
        l(Letter::Kinv),
    ];
    OpMatrix::from_fn(2, |r, k| e[2 * r + k].clone())
}

/// det_q(M) = M11 M22 - q^-1 M12 M21.
pub fn quantum_det<S: QRing>(m: &OpMatrix<S>) -> Result<NCPoly<S>> {
    if m.dim() != 2 {
        return Err(Error::BadDimension(format!(
            "quantum determinant needs 2 x 2, got {}",
            m.dim()
        )));
    }
    let qi = S::q_pow(-1, 1);
    Ok(m.get(0, 0) * m.get(1, 1) - (m.get(0, 1) * m.get(1, 0)).scale(&qi))
}

/// Antipode-type inverse [[M22, -q M12], [-q^-1 M21, M11]] of a 2 x 2 matrix
/// obeying the gg exchange relations with unit determinant.
pub fn quantum_inverse<S: QRing>(m: &OpMatrix<S>) -> Result<OpMatrix<S>> {
    if m.dim() != 2 {
        return Err(Error::BadDimension(format!("inverse needs 2 x 2, got {}", m.dim())));
    }
    let e = [
        m.get(1, 1).clone(),
        m.get(0, 1).scale(&-S::q()),
        m.get(1, 0).scale(&-S::q_pow(-1, 1)),
        m.get(0, 0).clone(),
    ];
    Ok(OpMatrix::from_fn(2, |r, c| e[2 * r + c].clone()))
}

/// Inverse of a monomial in K, K^-1 and scalars.
pub fn unit_inverse<S: QRing>(p: &NCPoly<S>) -> Result<NCPoly<S>> {
    let not_inv = || Error::NotInvertible(p.render());
    if p.len() != 1 {
        return Err(not_inv());
    }
    let (w, c) = p.leading().ok_or_else(not_inv)?;
    let ci = c.inv_unit().map_err(|_| not_inv())?;
    let mut inv = Vec::with_capacity(w.len());
    for &x in w.letters().iter().rev() {
        inv.push(match x {
            Letter::K => Letter::Kinv,
            Letter::Kinv => Letter::K,
            _ => return Err(not_inv()),
        });
    }
    Ok(NCPoly::monomial(ci, Word(inv)))
}

/// Closed-form inverse of a triangular 2 x 2 matrix with unit diagonal entries.
pub fn triangular_inverse<S: QRing>(m: &OpMatrix<S>) -> Result<OpMatrix<S>> {
    if m.dim() != 2 {
        return Err(Error::BadDimension(format!("inverse needs 2 x 2, got {}", m.dim())));
    }
    let ai = unit_inverse(m.get(0, 0))?;
    let di = unit_inverse(m.get(1, 1))?;
    let e = if m.get(0, 1).is_zero() {
        let low = -(&(&di * m.get(1, 0)) * &ai);
        [ai, NCPoly::zero(), low, di]
    } else if m.get(1, 0).is_zero() {
        let up = -(&(&ai * m.get(0, 1)) * &di);
        [ai, up, NCPoly::zero(), di]
    } else {
        return Err(Error::NotInvertible("matrix is not triangular".into()));
    };
    Ok(OpMatrix::from_fn(2, |r, c| e[2 * r + c].clone()))
}

fn check_two_sided<S: QRing>(
    m: &OpMatrix<S>,
    inv: &OpMatrix<S>,
    sys: &RewriteSystem<S>,
    what: &str,
) -> Result<()> {
    let id = OpMatrix::identity(m.dim());
    if (m * inv).nf(sys)? != id || (inv * m).nf(sys)? != id {
        return Err(Error::NotInvertible(format!("{what}: product is not the identity")));
    }
    Ok(())
}

impl<S: QRing> Heisenberg<S> {
    pub fn sl2() -> Result<Self> {
        Self::with_rmatrices(build_rplus(2)?, build_rminus(2)?)
    }

    /// Assembles the algebra for given R-matrices (used for negative controls).
    pub fn with_rmatrices(rplus: CMatrix<S>, rminus: CMatrix<S>) -> Result<Self> {
        if rplus.dim() != 4 || rminus.dim() != 4 {
            return Err(Error::BadDimension("sl2 needs 4 x 4 R-matrices".into()));
        }
        let g = letter_matrix(Letter::G);
        let om_plus = sl2_om_plus();
        let om_minus = sl2_om_minus();
        let mut relations = vec![
            LabeledRelation {
                id: "inverse-pair#0".into(),
                poly: l(Letter::K) * l(Letter::Kinv) - NCPoly::one(),
            },
            LabeledRelation {
                id: "inverse-pair#1".into(),
                poly: l(Letter::Kinv) * l(Letter::K) - NCPoly::one(),
            },
        ];
        let real = Realization {
            g: &g,
            om_plus: &om_plus,
            om_minus: &om_minus,
            rplus: &rplus,
            rminus: &rminus,
        };
        for spec in RelationSpec::catalog() {
            for (k, p) in expand_matrix_relation(&spec, &real).into_iter().enumerate() {
                relations.push(LabeledRelation {
                    id: format!("{}#{k}", spec.id),
                    poly: p,
                });
            }
        }
        let det = LabeledRelation {
            id: "det#0".into(),
            poly: quantum_det(&g)? - NCPoly::one(),
        };

        let polys = |pred: &dyn Fn(&LabeledRelation<S>) -> bool| -> Vec<NCPoly<S>> {
            relations.iter().filter(|r| pred(r)).map(|r| r.poly.clone()).collect()
        };
        let uq_ids: Vec<&str> = RelationSpec::catalog()
            .iter()
            .filter(|s| s.is_uq())
            .map(|s| s.id)
            .collect();
        let uq = assemble(&polys(&|r| {
            r.id.starts_with("inverse-pair")
                || uq_ids.iter().any(|id| r.id.split('#').next() == Some(id))
        }))?;
        let presentation = assemble(&polys(&|_| true))?;
        let mut system = presentation.clone();
        system.add_relation(&det.poly)?;
        relations.push(det);

        let g_inv = quantum_inverse(&g)?;
        check_two_sided(&g, &g_inv, &system, "g")?;
        let om_plus_inv = triangular_inverse(&om_plus)?;
        check_two_sided(&om_plus, &om_plus_inv, &system, "Omega+")?;
        let om_minus_inv = triangular_inverse(&om_minus)?;
        check_two_sided(&om_minus, &om_minus_inv, &system, "Omega-")?;
        let omega = (&om_plus * &om_minus_inv).nf(&system)?;
        let sigma = (&(&g_inv * &omega) * &g).nf(&system)?;

        Ok(Heisenberg {
            rplus,
            rminus,
            g,
            om_plus,
            om_minus,
            relations,
            system,
            presentation,
            uq,
            g_inv,
            om_plus_inv,
            om_minus_inv,
            omega,
            sigma,
        })
    }

    pub fn relations(&self) -> &[LabeledRelation<S>] {
        &self.relations
    }

    pub fn system(&self) -> &RewriteSystem<S> {
        &self.system
    }

    pub fn presentation(&self) -> &RewriteSystem<S> {
        &self.presentation
    }

    pub fn uq_system(&self) -> &RewriteSystem<S> {
        &self.uq
    }

    /// Critical pairs of the full system that do not resolve.
    pub fn unresolved(&self) -> Result<Vec<(Word, NCPoly<S>)>> {
        unresolved_pairs(&self.system)
    }

    /// Replaces Omega and Sigma entries by their definitions.
    pub fn expand_composites(&self, p: &NCPoly<S>) -> NCPoly<S> {
        p.substitute(|x| match x {
            Letter::Omega(i, j) => Some(self.omega.get(i as usize, j as usize).clone()),
            Letter::Sigma(i, j) => Some(self.sigma.get(i as usize, j as usize).clone()),
            _ => None,
        })
    }

    /// Normal form in the full algebra, composites expanded.
    pub fn nf(&self, p: &NCPoly<S>) -> Result<NCPoly<S>> {
        self.system.nf(&self.expand_composites(p))
    }

    pub fn nf_matrix(&self, m: &OpMatrix<S>) -> Result<OpMatrix<S>> {
        m.try_map(|p| self.nf(p))
    }

    pub fn omega_letters(&self) -> OpMatrix<S> {
        letter_matrix(Letter::Omega)
    }

    pub fn sigma_letters(&self) -> OpMatrix<S> {
        letter_matrix(Letter::Sigma)
    }
}
