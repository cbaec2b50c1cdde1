use serde::Serialize;

use super::dagger::DaggerTable;
use super::prover::{ProofTrace, Prover, ProverConfig};
use super::rulebase::{RuleBase, PRINTED_SIGMA_MIXED};
use super::symbol::{parse_equation, parse_word, MatEquation, MatName, MatWord};
use crate::error::{Error, Result};
use crate::scalars::Ring;
use crate::star::StarForm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProofStatus {
    Proved,
    NotProved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obligation {
    pub id: String,
    pub source: String,
    pub equation: String,
    pub status: ProofStatus,
    pub steps: Option<usize>,
    pub trace: Option<ProofTrace>,
    pub reason: Option<String>,
}

impl Obligation {
    pub fn proved(&self) -> bool {
        self.status == ProofStatus::Proved
    }
}

/// Proves `eq`; proved obligations become lemmas for later ones.
fn discharge<S: Ring>(prover: &mut Prover<S>, id: &str, source: &str, eq: MatEquation<S>, lemma: bool) -> Result<Obligation> {
    let equation = eq.render();
    match prover.prove(&eq) {
        Ok(trace) => {
            prover.replay(&trace).map_err(|e| Error::NotProved {
                depth: prover.config().max_depth,
                reason: format!("trace for {id} does not replay: {e}"),
            })?;
            if lemma && !trace.is_empty() {
                prover.add_lemma(id, source, eq)?;
            }
            Ok(Obligation {
                id: id.into(),
                source: source.into(),
                equation,
                status: ProofStatus::Proved,
                steps: Some(trace.len()),
                trace: Some(trace),
                reason: None,
            })
        }
        Err(Error::NotProved { reason, .. }) => Ok(Obligation {
            id: id.into(),
            source: source.into(),
            equation,
            status: ProofStatus::NotProved,
            steps: None,
            trace: None,
            reason: Some(reason),
        }),
        Err(e) => Err(e),
    }
}

fn config(depth: usize) -> ProverConfig {
    ProverConfig {
        max_depth: depth,
        ..ProverConfig::default()
    }
}

/// A worked example: the dagger image of `rule` should be closed by one of
/// the `expect` rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleComputation {
    pub rule: String,
    pub expect: Vec<String>,
    pub holds: bool,
    pub trace: Option<ProofTrace>,
}

const HYPERBOLOID_SAMPLES: &[(&str, &[&str])] = &[
    ("gg+", &["gg+", "gg-"]),
    ("op-op+", &["sm-sm+", "sm-sm-"]),
    ("op-g", &["h-sm"]),
];

/// A printed relation that the rule base replaces, checked against the base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedAudit {
    pub id: String,
    pub printed: String,
    pub derived: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub form: StarForm,
    pub depth: usize,
    pub obligations: Vec<Obligation>,
    pub samples: Vec<SampleComputation>,
    pub printed_audit: Vec<PrintedAudit>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.obligations.iter().all(Obligation::proved) && self.samples.iter().all(|s| s.holds)
    }

    pub fn not_proved(&self) -> Vec<&str> {
        self.obligations
            .iter()
            .filter(|o| !o.proved())
            .map(|o| o.id.as_str())
            .collect()
    }
}

/// Proves the dagger image of every base rule from the base.
pub fn verify_involution_consistency<S: Ring>(form: StarForm, depth: usize) -> Result<InvolutionReport> {
    verify_involution_with::<S>(&DaggerTable::new(form), depth)
}

pub fn verify_involution_with<S: Ring>(table: &DaggerTable, depth: usize) -> Result<InvolutionReport> {
    let base: RuleBase<S> = RuleBase::standard();
    let mut prover = Prover::new(base.clone(), config(depth))?;
    let mut obligations = Vec::new();
    for r in base.rules() {
        let eq = table.dagger_equation(&r.eq);
        obligations.push(discharge(&mut prover, &format!("{}-dagger", r.id), &r.source, eq, true)?);
    }
    let mut samples = Vec::new();
    let mut printed_audit = Vec::new();
    if table.form == StarForm::Hyperboloid {
        for (rule, expect) in HYPERBOLOID_SAMPLES {
            let trace = obligations
                .iter()
                .find(|o| o.id == format!("{rule}-dagger"))
                .and_then(|o| o.trace.clone());
            let holds = trace
                .as_ref()
                .is_some_and(|t| t.rules_used().iter().any(|u| expect.contains(u)));
            samples.push(SampleComputation {
                rule: (*rule).into(),
                expect: expect.iter().map(|s| (*s).into()).collect(),
                holds,
                trace,
            });
        }
        // fresh prover: lemmas must not leak into the audit
        let audit = Prover::new(base, config(depth))?;
        for (id, src) in PRINTED_SIGMA_MIXED {
            let eq: MatEquation<S> = parse_equation(src)?;
            printed_audit.push(PrintedAudit {
                id: (*id).into(),
                printed: eq.render(),
                derived: audit.prove(&eq).is_ok(),
            });
        }
    }
    Ok(InvolutionReport {
        form: table.form,
        depth,
        obligations,
        samples,
        printed_audit,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvolveReport {
    pub steps: usize,
    pub depth: usize,
    /// g(n)^dagger = g(n) with g(n) = Omega^n g
    pub g: Obligation,
    /// Omega(n)^dagger = g(n)^-1 Omega(n) g(n)
    pub omega: Obligation,
}

impl EvolveReport {
    pub fn passed(&self) -> bool {
        self.g.proved() && self.omega.proved()
    }
}

fn power_word<S: Ring>(sym: &str, n: usize, tail: &str) -> Result<MatWord<S>> {
    let mut s = vec![sym; n];
    s.push(tail);
    Ok(MatWord::new(parse_word(&s.join(" "))?))
}

/// Hermiticity of the evolved variables under the hyperboloid form.
pub fn evolve_check<S: Ring>(steps: usize, depth: usize) -> Result<EvolveReport> {
    let table = DaggerTable::new(StarForm::Hyperboloid);
    let mut prover: Prover<S> = Prover::new(RuleBase::standard(), config(depth))?;
    let gn: MatWord<S> = power_word("Omega", steps, "g")?;
    let g = MatEquation {
        lhs: table.dagger_word(&gn),
        rhs: gn.clone(),
    };
    let g_ob = discharge(&mut prover, "g(n)", "evolution", g, false)?;
    let omega: MatWord<S> = MatWord::new(parse_word("Omega")?);
    let mut conj = super::symbol::inverse_word(&gn.syms);
    conj.extend(omega.syms.iter().copied());
    conj.extend(gn.syms.iter().copied());
    let om = MatEquation {
        lhs: table.dagger_word(&omega),
        rhs: MatWord::new(conj),
    };
    let om_ob = discharge(&mut prover, "Omega(n)", "evolution", om, false)?;
    Ok(EvolveReport {
        steps,
        depth,
        g: g_ob,
        omega: om_ob,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WznwReport {
    pub depth: usize,
    pub obligation: Obligation,
}

/// (ML g MR^-1)^dagger = ML g MR^-1 with ML, MR the two monodromies.
pub fn wznw_periodicity_check<S: Ring>(depth: usize) -> Result<WznwReport> {
    wznw_with::<S>(&DaggerTable::new(StarForm::Hyperboloid), "g", depth)
}

/// Same check with a custom table and middle word (`1` for the identity).
pub fn wznw_with<S: Ring>(table: &DaggerTable, middle: &str, depth: usize) -> Result<WznwReport> {
    let mut prover: Prover<S> = Prover::new(RuleBase::standard(), config(depth))?;
    let w: MatWord<S> = MatWord::new(parse_word(&format!("ML {middle} MR^-1"))?);
    let eq = MatEquation {
        lhs: table.dagger_word(&w),
        rhs: w,
    };
    Ok(WznwReport {
        depth,
        obligation: discharge(&mut prover, "monodromy", "periodicity", eq, false)?,
    })
}

/// Compact table with g and h fixed instead of exchanged.
pub fn corrupted_compact_table() -> DaggerTable {
    let g = parse_word("g").expect("symbol");
    let h = parse_word("h").expect("symbol");
    DaggerTable::new(StarForm::Compact)
        .with_image(MatName::G, g)
        .with_image(MatName::H, h)
}

/// Hyperboloid table with ML fixed instead of sent to MR.
pub fn corrupted_monodromy_table() -> DaggerTable {
    DaggerTable::new(StarForm::Hyperboloid).with_image(MatName::ML, parse_word("ML").expect("symbol"))
}
