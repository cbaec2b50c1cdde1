use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Matrix-valued symbol of the matrix tier.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum MatName {
    G,
    H,
    OmegaPlus,
    OmegaMinus,
    SigmaPlus,
    SigmaMinus,
    /// Omega+ Omega-^-1
    Omega,
    /// Sigma+ Sigma-^-1
    Sigma,
    /// Left monodromy, identified with Omega.
    ML,
    /// Right monodromy, identified with Sigma.
    MR,
    RPlus,
    RMinus,
    P,
}

impl MatName {
    pub const ALL: [MatName; 13] = [
        MatName::G,
        MatName::H,
        MatName::OmegaPlus,
        MatName::OmegaMinus,
        MatName::SigmaPlus,
        MatName::SigmaMinus,
        MatName::Omega,
        MatName::Sigma,
        MatName::ML,
        MatName::MR,
        MatName::RPlus,
        MatName::RMinus,
        MatName::P,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MatName::G => "g",
            MatName::H => "h",
            MatName::OmegaPlus => "Op",
            MatName::OmegaMinus => "Om",
            MatName::SigmaPlus => "Sp",
            MatName::SigmaMinus => "Sm",
            MatName::Omega => "Omega",
            MatName::Sigma => "Sigma",
            MatName::ML => "ML",
            MatName::MR => "MR",
            MatName::RPlus => "R+",
            MatName::RMinus => "R-",
            MatName::P => "P",
        }
    }

    /// R+, R- and P act on both spaces and carry no space label.
    pub fn is_two_space(self) -> bool {
        matches!(self, MatName::RPlus | MatName::RMinus | MatName::P)
    }
}

/// Tensor factor a single-matrix symbol acts on. `Both` is the plain 2 x 2
/// matrix (no tensor product), also used for R and P.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Space {
    Both,
    One,
    Two,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct MatSymbol {
    pub name: MatName,
    pub space: Space,
    pub inv: bool,
}

impl MatSymbol {
    pub fn new(name: MatName, space: Space, inv: bool) -> Self {
        let space = if name.is_two_space() { Space::Both } else { space };
        let inv = inv && name != MatName::P;
        MatSymbol { name, space, inv }
    }

    pub fn inverse(self) -> Self {
        MatSymbol::new(self.name, self.space, !self.inv)
    }

    /// Conjugation by P: exchanges the spaces; P R+ P = R-^-1.
    pub fn swap(self) -> Self {
        let space = match self.space {
            Space::One => Space::Two,
            Space::Two => Space::One,
            Space::Both => Space::Both,
        };
        match self.name {
            MatName::RPlus => MatSymbol::new(MatName::RMinus, space, !self.inv),
            MatName::RMinus => MatSymbol::new(MatName::RPlus, space, !self.inv),
            _ => MatSymbol::new(self.name, space, self.inv),
        }
    }

    pub fn with_space(self, space: Space) -> Self {
        MatSymbol::new(self.name, space, self.inv)
    }

    pub fn render(self) -> String {
        let sp = match self.space {
            Space::Both => "",
            Space::One => "1",
            Space::Two => "2",
        };
        let inv = if self.inv { "^-1" } else { "" };
        format!("{}{sp}{inv}", self.name.as_str())
    }
}

impl fmt::Display for MatSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn inverse_word(w: &[MatSymbol]) -> Vec<MatSymbol> {
    w.iter().rev().map(|s| s.inverse()).collect()
}

pub fn swap_word(w: &[MatSymbol]) -> Vec<MatSymbol> {
    w.iter().map(|s| s.swap()).collect()
}

/// Cancels adjacent x x^-1 pairs (P P included).
pub fn free_reduce(w: &[MatSymbol]) -> Vec<MatSymbol> {
    let mut out: Vec<MatSymbol> = Vec::with_capacity(w.len());
    for &s in w {
        if let Some(&last) = out.last() {
            if last == s.inverse() {
                out.pop();
                continue;
            }
        }
        out.push(s);
    }
    out
}

/// Replaces Omega, Sigma, ML and MR by their triangular factorizations.
pub fn expand(w: &[MatSymbol]) -> Vec<MatSymbol> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &s in w {
        let (p, m) = match s.name {
            MatName::Omega | MatName::ML => (MatName::OmegaPlus, MatName::OmegaMinus),
            MatName::Sigma | MatName::MR => (MatName::SigmaPlus, MatName::SigmaMinus),
            _ => {
                out.push(s);
                continue;
            }
        };
        let plus = MatSymbol::new(p, s.space, false);
        let minus_inv = MatSymbol::new(m, s.space, true);
        if s.inv {
            out.push(minus_inv.inverse());
            out.push(plus.inverse());
        } else {
            out.push(plus);
            out.push(minus_inv);
        }
    }
    free_reduce(&out)
}

pub fn render_word(w: &[MatSymbol]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|s| s.render()).collect::<Vec<_>>().join(" ")
    }
}

/// Scalar multiple of a product of matrix symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatWord<S> {
    pub coeff: S,
    pub syms: Vec<MatSymbol>,
}

impl<S: Ring> MatWord<S> {
    pub fn new(syms: Vec<MatSymbol>) -> Self {
        MatWord {
            coeff: S::one(),
            syms,
        }
    }

    pub fn render(&self) -> String {
        let w = render_word(&self.syms);
        if self.coeff.is_one() {
            w
        } else {
            format!("({}) {w}", self.coeff.render())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatEquation<S> {
    pub lhs: MatWord<S>,
    pub rhs: MatWord<S>,
}

impl<S: Ring> MatEquation<S> {
    pub fn render(&self) -> String {
        format!("{} = {}", self.lhs.render(), self.rhs.render())
    }

    /// Relator `lhs rhs^-1` and its value `c_rhs / c_lhs`.
    pub fn relator(&self) -> Result<(Vec<MatSymbol>, S)> {
        let mut w = self.lhs.syms.clone();
        w.extend(inverse_word(&self.rhs.syms));
        let v = self.rhs.coeff.clone() * self.lhs.coeff.inv_unit()?;
        Ok((w, v))
    }
}

/// Parses the compact word syntax used by the rule base, e.g.
/// `R+ Op1 g2 = g2 Op1` or `Sigma = g^-1 Omega g`.
pub fn parse_equation<S: Ring>(src: &str) -> Result<MatEquation<S>> {
    let (l, r) = src
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("no `=` in `{src}`")))?;
    Ok(MatEquation {
        lhs: MatWord::new(parse_word(l)?),
        rhs: MatWord::new(parse_word(r)?),
    })
}

pub fn parse_word(src: &str) -> Result<Vec<MatSymbol>> {
    let mut out = Vec::new();
    for tok in src.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (body, inv) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let (body, space) = match body.as_bytes().last() {
            Some(b'1') => (&body[..body.len() - 1], Space::One),
            Some(b'2') => (&body[..body.len() - 1], Space::Two),
            _ => (body, Space::Both),
        };
        let name = MatName::ALL
            .into_iter()
            .find(|n| n.as_str() == body)
            .ok_or_else(|| Error::Config(format!("unknown matrix symbol `{tok}`")))?;
        out.push(MatSymbol::new(name, space, inv));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    #[test]
    fn parse_render_roundtrip() {
        let e: MatEquation<Scalar> = parse_equation("R+ Op1 g2 = g2 Sm1^-1 R-^-1").unwrap();
        assert_eq!(e.render(), "R+ Op1 g2 = g2 Sm1^-1 R-^-1");
    }

    #[test]
    fn swap_is_an_involution_and_maps_r() {
        let w = parse_word("R+ g1 Sm2^-1 R-^-1").unwrap();
        assert_eq!(render_word(&swap_word(&w)), "R-^-1 g2 Sm1^-1 R+");
        assert_eq!(swap_word(&swap_word(&w)), w);
    }

    #[test]
    fn expansion_of_inverse_composite() {
        let w = parse_word("Omega^-1 g Sigma").unwrap();
        assert_eq!(render_word(&expand(&w)), "Om Op^-1 g Sp Sm^-1");
    }
}
