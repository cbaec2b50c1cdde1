use serde::Serialize;

use super::dagger::DaggerTable;
use super::symbol::{parse_equation, MatEquation};
use crate::scalars::Ring;
use crate::star::StarForm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "from", rename_all = "lowercase")]
pub enum RuleOrigin {
    Transcribed,
    /// Dagger image of another rule under the hyperboloid table.
    Generated(String),
    /// Previously proved obligation.
    Lemma(String),
}

#[derive(Clone, Debug)]
pub struct BaseRule<S> {
    pub id: String,
    /// Short provenance tag, e.g. `gg-exchange` or `definition`.
    pub source: String,
    pub eq: MatEquation<S>,
    pub origin: RuleOrigin,
}

/// Relations among the matrix symbols, in the order obligations are checked.
#[derive(Clone, Debug)]
pub struct RuleBase<S> {
    rules: Vec<BaseRule<S>>,
}

const TRANSCRIBED: &[(&str, &str, &str)] = &[
    ("gg+", "gg-exchange", "R+ g1 g2 = g2 g1 R+"),
    ("gg-", "gg-exchange", "R- g1 g2 = g2 g1 R-"),
    ("op-op+", "omega-exchange", "R+ Op1 Op2 = Op2 Op1 R+"),
    ("op-op-", "omega-exchange", "R- Op1 Op2 = Op2 Op1 R-"),
    ("om-om+", "omega-exchange", "R+ Om1 Om2 = Om2 Om1 R+"),
    ("om-om-", "omega-exchange", "R- Om1 Om2 = Om2 Om1 R-"),
    ("op-om", "omega-exchange", "R+ Op1 Om2 = Om2 Op1 R+"),
    ("om-op", "omega-exchange", "R- Om1 Op2 = Op2 Om1 R-"),
    ("op-g", "omega-g-exchange", "R+ Op1 g2 = g2 Op1"),
    ("om-g", "omega-g-exchange", "R- Om1 g2 = g2 Om1"),
    ("def-sigma", "definition", "Sigma = g^-1 Omega g"),
    ("def-h+", "definition", "h = Sp^-1 g^-1 Op"),
    ("def-h-", "definition", "h = Sm^-1 g^-1 Om"),
    ("comm-op-sp", "omega-sigma-commutation", "Op1 Sp2 = Sp2 Op1"),
    ("comm-op-sm", "omega-sigma-commutation", "Op1 Sm2 = Sm2 Op1"),
    ("comm-om-sp", "omega-sigma-commutation", "Om1 Sp2 = Sp2 Om1"),
    ("comm-om-sm", "omega-sigma-commutation", "Om1 Sm2 = Sm2 Om1"),
    ("hh+", "right-exchange", "R+ h1 h2 = h2 h1 R+"),
    ("hh-", "right-exchange", "R- h1 h2 = h2 h1 R-"),
    ("sp-sp+", "right-exchange", "Sp1 Sp2 R+ = R+ Sp2 Sp1"),
    ("sp-sp-", "right-exchange", "Sp1 Sp2 R- = R- Sp2 Sp1"),
    ("sm-sm+", "right-exchange", "Sm1 Sm2 R+ = R+ Sm2 Sm1"),
    ("sm-sm-", "right-exchange", "Sm1 Sm2 R- = R- Sm2 Sm1"),
    ("h-sp", "right-exchange", "h1 Sp2 = Sp2 R- h1"),
    ("h-sm", "right-exchange", "h1 Sm2 = Sm2 R+ h1"),
    ("omega-reflection", "collapsed-exchange", "Omega1 R-^-1 Omega2 R- = R+^-1 Omega2 R+ Omega1"),
    ("g-omega", "collapsed-exchange", "R- g1 Omega2 = Omega2 R+ g1"),
];

/// The two mixed Sigma relations as printed, which the base replaces by
/// generated star images.
pub const PRINTED_SIGMA_MIXED: &[(&str, &str)] = &[
    ("sm-sp (printed)", "Sm1 Sp2 R+ = R+ Sm2 Sm1"),
    ("sp-sm (printed)", "Sp1 Sm2 R- = R- Sm2 Sp1"),
];

/// (generated id, rule whose hyperboloid image it is)
const GENERATED: &[(&str, &str)] = &[("sm-sp", "op-om"), ("sp-sm", "om-op")];

impl<S: Ring> RuleBase<S> {
    pub fn standard() -> Self {
        let mut rules: Vec<BaseRule<S>> = TRANSCRIBED
            .iter()
            .map(|(id, source, eq)| BaseRule {
                id: (*id).into(),
                source: (*source).into(),
                eq: parse_equation(eq).expect("rule base entry"),
                origin: RuleOrigin::Transcribed,
            })
            .collect();
        let table = DaggerTable::new(StarForm::Hyperboloid);
        for (id, from) in GENERATED {
            let src = rules.iter().find(|r| r.id == *from).expect("generator rule");
            let eq = table.dagger_equation(&src.eq);
            // keep right-exchange rules next to each other
            let at = rules.iter().position(|r| r.id == "h-sp").unwrap_or(rules.len());
            rules.insert(
                at,
                BaseRule {
                    id: (*id).into(),
                    source: "right-exchange".into(),
                    eq,
                    origin: RuleOrigin::Generated((*from).into()),
                },
            );
        }
        RuleBase { rules }
    }

    pub fn from_rules(rules: Vec<BaseRule<S>>) -> Self {
        RuleBase { rules }
    }

    pub fn rules(&self) -> &[BaseRule<S>] {
        &self.rules
    }

    pub fn get(&self, id: &str) -> Option<&BaseRule<S>> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn push(&mut self, rule: BaseRule<S>) {
        self.rules.push(rule);
    }
}
