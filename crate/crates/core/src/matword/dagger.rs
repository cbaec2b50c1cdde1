use std::collections::BTreeMap;

use super::symbol::{expand, free_reduce, inverse_word, parse_word, MatEquation, MatName, MatSymbol, MatWord, Space};
use crate::scalars::Ring;
use crate::star::StarForm;

/// Dagger images of the matrix symbols, written in the `Both` space and
/// relabeled to the space of the symbol they replace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerTable {
    pub form: StarForm,
    images: BTreeMap<MatName, Vec<MatSymbol>>,
}

impl DaggerTable {
    pub fn new(form: StarForm) -> Self {
        let pairs: &[(&str, &str)] = match form {
            StarForm::Hyperboloid => &[
                ("g", "g"),
                ("h", "h"),
                ("Op", "Sm^-1"),
                ("Om", "Sp^-1"),
                ("Sp", "Om^-1"),
                ("Sm", "Op^-1"),
                ("Omega", "Sigma"),
                ("Sigma", "Omega"),
                ("ML", "MR"),
                ("MR", "ML"),
                ("R+", "R-"),
                ("R-", "R+"),
                ("P", "P"),
            ],
            StarForm::Compact => &[
                ("g", "h"),
                ("h", "g"),
                ("Op", "Om"),
                ("Om", "Op"),
                ("Sp", "Sm"),
                ("Sm", "Sp"),
                ("Omega", "Op^-1 Om"),
                ("Sigma", "Sp^-1 Sm"),
                ("ML", "Op^-1 Om"),
                ("MR", "Sp^-1 Sm"),
                ("R+", "R-"),
                ("R-", "R+"),
                ("P", "P"),
            ],
        };
        let images = pairs
            .iter()
            .map(|(k, v)| {
                let key = parse_word(k).expect("table key")[0].name;
                (key, parse_word(v).expect("table image"))
            })
            .collect();
        DaggerTable { form, images }
    }

    /// Replaces one image; used for negative controls.
    pub fn with_image(mut self, name: MatName, image: Vec<MatSymbol>) -> Self {
        self.images.insert(name, image);
        self
    }

    pub fn image(&self, s: MatSymbol) -> Vec<MatSymbol> {
        let base: Vec<MatSymbol> = self.images[&s.name]
            .iter()
            .map(|t| {
                if t.name.is_two_space() || s.space == Space::Both {
                    *t
                } else {
                    t.with_space(s.space)
                }
            })
            .collect();
        if s.inv {
            inverse_word(&base)
        } else {
            base
        }
    }

    /// (c X1 ... Xk)^dagger = conj(c) Xk^dagger ... X1^dagger
    pub fn dagger_word<S: Ring>(&self, w: &MatWord<S>) -> MatWord<S> {
        let mut syms = Vec::new();
        for &s in w.syms.iter().rev() {
            syms.extend(self.image(s));
        }
        MatWord {
            coeff: w.coeff.conj(),
            syms: free_reduce(&syms),
        }
    }

    pub fn dagger_equation<S: Ring>(&self, e: &MatEquation<S>) -> MatEquation<S> {
        MatEquation {
            lhs: self.dagger_word(&e.lhs),
            rhs: self.dagger_word(&e.rhs),
        }
    }

    /// dagger(dagger(w)) equals w after expanding composites.
    pub fn is_involutive_on(&self, w: &[MatSymbol]) -> bool {
        let mw: MatWord<crate::Scalar> = MatWord::new(w.to_vec());
        let back = self.dagger_word(&self.dagger_word(&mw));
        expand(&back.syms) == expand(w)
    }
}
