use num_traits::Zero;
use serde::Serialize;

use super::algebra::{quantum_det, Heisenberg};
use super::opmatrix::OpMatrix;
use crate::error::Result;
use crate::freealg::{Letter, NCPoly, RewriteSystem};
use crate::scalars::QRing;

/// Outcome of a matrix identity checked entrywise in normal form.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MatrixCheck {
    pub name: String,
    pub holds: bool,
    /// First nonzero residual entry as (row, col, normal form).
    pub witness: Option<(usize, usize, String)>,
}

impl MatrixCheck {
    pub fn from_residual<S: QRing>(name: &str, residual: &OpMatrix<S>) -> Self {
        let witness = residual
            .first_nonzero()
            .map(|(r, c, p)| (r, c, p.render()));
        MatrixCheck {
            name: name.into(),
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Outcome of a scalar identity `lhs = rhs` checked in normal form.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub residual: String,
}

pub struct Identity<S> {
    pub name: String,
    pub lhs: NCPoly<S>,
    pub rhs: NCPoly<S>,
}

pub fn check_identities<S: QRing>(
    sys: &RewriteSystem<S>,
    ids: &[Identity<S>],
) -> Result<Vec<IdentityCheck>> {
    ids.iter()
        .map(|id| {
            let r = sys.nf(&(&id.lhs - &id.rhs))?;
            Ok(IdentityCheck {
                name: id.name.clone(),
                holds: r.is_zero(),
                residual: r.render(),
            })
        })
        .collect()
}

fn letter<S: QRing>(x: Letter) -> NCPoly<S> {
    NCPoly::letter(x)
}

/// K Xp K^-1 = q Xp, K Xm K^-1 = q^-1 Xm, [Xp, Xm] = (K^2 - K^-2) / lambda.
pub fn jimbo_drinfeld_identities<S: QRing>() -> Vec<Identity<S>> {
    let (k, ki, xp, xm) = (
        letter::<S>(Letter::K),
        letter::<S>(Letter::Kinv),
        letter::<S>(Letter::Xp),
        letter::<S>(Letter::Xm),
    );
    let li = S::lambda().inv_unit().expect("lambda is a unit");
    vec![
        Identity {
            name: "K Xp K^-1 = q Xp".into(),
            lhs: &(&k * &xp) * &ki,
            rhs: xp.scale(&S::q()),
        },
        Identity {
            name: "K Xm K^-1 = q^-1 Xm".into(),
            lhs: &(&k * &xm) * &ki,
            rhs: xm.scale(&S::q_pow(-1, 1)),
        },
        Identity {
            name: "[Xp, Xm] = (K^2 - K^-2)/lambda".into(),
            lhs: xp.commutator(&xm),
            rhs: (&k * &k - &ki * &ki).scale(&li),
        },
    ]
}

/// Jimbo-Drinfeld relations, checked in the system generated by the
/// Omega-Omega relations alone.
pub fn check_jimbo_drinfeld<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<IdentityCheck>> {
    check_identities(alg.uq_system(), &jimbo_drinfeld_identities())
}

fn generators() -> Vec<Letter> {
    let mut v = vec![Letter::Kinv, Letter::K, Letter::Xp, Letter::Xm];
    for i in 0..2 {
        for j in 0..2 {
            v.push(Letter::G(i, j));
        }
    }
    v
}

/// Commutators of det_q(g) with every generator, without the unit-determinant
/// relation.
pub fn check_det_central<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<IdentityCheck>> {
    check_central(alg.presentation(), &quantum_det(&alg.g)?)
}

pub fn check_central<S: QRing>(sys: &RewriteSystem<S>, x: &NCPoly<S>) -> Result<Vec<IdentityCheck>> {
    generators()
        .into_iter()
        .map(|l| {
            let gen = NCPoly::letter(l);
            let r = sys.nf(&x.commutator(&gen))?;
            Ok(IdentityCheck {
                name: format!("[det_q(g), {l}]"),
                holds: r.is_zero(),
                residual: r.render(),
            })
        })
        .collect()
}

/// det_q(Omega+) = det_q(Omega-) = 1.
pub fn check_det_omega<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<IdentityCheck>> {
    let one = NCPoly::constant(S::one());
    check_identities(
        alg.uq_system(),
        &[
            Identity {
                name: "det_q(Omega+) = 1".into(),
                lhs: quantum_det(&alg.om_plus)?,
                rhs: one.clone(),
            },
            Identity {
                name: "det_q(Omega-) = 1".into(),
                lhs: quantum_det(&alg.om_minus)?,
                rhs: one,
            },
        ],
    )
}

/// Every extracted relation reduces to zero in the assembled system.
pub fn check_self_consistency<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<IdentityCheck>> {
    alg.relations()
        .iter()
        .map(|r| {
            let nf = alg.system().nf(&r.poly)?;
            Ok(IdentityCheck {
                name: r.id.clone(),
                holds: nf.is_zero(),
                residual: nf.render(),
            })
        })
        .collect()
}

/// Two shapes of the reflection equation for a 2 x 2 matrix X.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectionForm {
    /// X^1 R-^-1 X^2 R- = R+^-1 X^2 R+ X^1
    Omega,
    /// R+ X^2 R+^-1 X^1 = X^1 R- X^2 R-^-1
    Sigma,
}

pub fn reflection_residual<S: QRing>(
    alg: &Heisenberg<S>,
    x: &OpMatrix<S>,
    form: ReflectionForm,
) -> Result<OpMatrix<S>> {
    let rp = OpMatrix::from_cmatrix(&alg.rplus);
    let rm = OpMatrix::from_cmatrix(&alg.rminus);
    let rpi = OpMatrix::from_cmatrix(&alg.rplus.inverse()?);
    let rmi = OpMatrix::from_cmatrix(&alg.rminus.inverse()?);
    let (x1, x2) = (x.embed1(), x.embed2());
    let res = match form {
        ReflectionForm::Omega => {
            &(&(&(&x1 * &rmi) * &x2) * &rm) - &(&(&(&rpi * &x2) * &rp) * &x1)
        }
        ReflectionForm::Sigma => {
            &(&(&(&rp * &x2) * &rpi) * &x1) - &(&(&(&x1 * &rm) * &x2) * &rmi)
        }
    };
    alg.nf_matrix(&res)
}

/// R- g^1 Omega^2 = Omega^2 R+ g^1
pub fn g_omega_residual<S: QRing>(alg: &Heisenberg<S>) -> Result<OpMatrix<S>> {
    let rp = OpMatrix::from_cmatrix(&alg.rplus);
    let rm = OpMatrix::from_cmatrix(&alg.rminus);
    let (g1, o2) = (alg.g.embed1(), alg.omega.embed2());
    alg.nf_matrix(&(&(&(&rm * &g1) * &o2) - &(&(&o2 * &rp) * &g1)))
}

/// All sixteen commutators [Omega_ij, Sigma_kl].
pub fn check_omega_sigma_commute<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for i in 0..2u8 {
        for j in 0..2u8 {
            for k in 0..2u8 {
                for l in 0..2u8 {
                    let o = NCPoly::letter(Letter::Omega(i, j));
                    let s = NCPoly::letter(Letter::Sigma(k, l));
                    let r = alg.nf(&o.commutator(&s))?;
                    out.push(IdentityCheck {
                        name: format!("[{}, {}]", Letter::Omega(i, j), Letter::Sigma(k, l)),
                        holds: r.is_zero(),
                        residual: r.render(),
                    });
                }
            }
        }
    }
    Ok(out)
}
