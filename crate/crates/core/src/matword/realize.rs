use serde::Serialize;

use super::rulebase::RuleBase;
use super::symbol::{MatName, MatSymbol, MatWord, Space};
use crate::error::Result;
use crate::heisenberg::{Heisenberg, MatrixCheck, OpMatrix};
use crate::scalars::QRing;

/// Scalar-tier matrix for a symbol, if it has one. Sigma+-, h and the
/// monodromies other than through Omega/Sigma have none.
fn realize_symbol<S: QRing>(alg: &Heisenberg<S>, s: MatSymbol) -> Result<Option<OpMatrix<S>>> {
    let omega_inv = || &alg.om_minus * &alg.om_plus_inv;
    let m = match (s.name, s.inv) {
        (MatName::G, false) => alg.g.clone(),
        (MatName::G, true) => alg.g_inv.clone(),
        (MatName::OmegaPlus, false) => alg.om_plus.clone(),
        (MatName::OmegaPlus, true) => alg.om_plus_inv.clone(),
        (MatName::OmegaMinus, false) => alg.om_minus.clone(),
        (MatName::OmegaMinus, true) => alg.om_minus_inv.clone(),
        (MatName::Omega | MatName::ML, false) => alg.omega.clone(),
        (MatName::Omega | MatName::ML, true) => omega_inv(),
        (MatName::Sigma | MatName::MR, false) => alg.sigma.clone(),
        (MatName::Sigma | MatName::MR, true) => &(&alg.g_inv * &omega_inv()) * &alg.g,
        (MatName::RPlus, false) => OpMatrix::from_cmatrix(&alg.rplus),
        (MatName::RPlus, true) => OpMatrix::from_cmatrix(&alg.rplus.inverse()?),
        (MatName::RMinus, false) => OpMatrix::from_cmatrix(&alg.rminus),
        (MatName::RMinus, true) => OpMatrix::from_cmatrix(&alg.rminus.inverse()?),
        (MatName::P, _) => OpMatrix::from_cmatrix(&crate::rmat::build_p(2)?),
        _ => return Ok(None),
    };
    Ok(Some(match s.space {
        Space::One => m.embed1(),
        Space::Two => m.embed2(),
        Space::Both => m,
    }))
}

fn realize_word<S: QRing>(alg: &Heisenberg<S>, w: &MatWord<S>, dim: usize) -> Result<Option<OpMatrix<S>>> {
    let mut acc = OpMatrix::identity(dim);
    for &s in &w.syms {
        match realize_symbol(alg, s)? {
            Some(m) => acc = &acc * &m,
            None => return Ok(None),
        }
    }
    Ok(Some(acc.scale(&w.coeff)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossTierEntry {
    pub rule: String,
    pub check: MatrixCheck,
}

/// Evaluates every realizable base rule entrywise in the scalar tier.
pub fn cross_tier_check<S: QRing>(alg: &Heisenberg<S>) -> Result<Vec<CrossTierEntry>> {
    let base: RuleBase<S> = RuleBase::standard();
    let mut out = Vec::new();
    for r in base.rules() {
        let two_space = r.eq.lhs.syms.iter().chain(&r.eq.rhs.syms).any(|s| s.space != Space::Both || s.name.is_two_space());
        let dim = if two_space { 4 } else { 2 };
        let (Some(l), Some(rh)) = (realize_word(alg, &r.eq.lhs, dim)?, realize_word(alg, &r.eq.rhs, dim)?) else {
            continue;
        };
        let residual = alg.nf_matrix(&(&l - &rh))?;
        out.push(CrossTierEntry {
            rule: r.id.clone(),
            check: MatrixCheck::from_residual(&r.id, &residual),
        });
    }
    Ok(out)
}
