//! Runs every check in dependency order and collects a JSON-serializable report.

use std::sync::OnceLock;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freealg::{check_local_confluence, Letter, NCPoly, RewriteRule, RewriteSystem};
use crate::heisenberg::{
    check_det_central, check_det_omega, check_jimbo_drinfeld, check_omega_sigma_commute, check_self_consistency,
    g_omega_residual, reflection_residual, MatrixCheck, ReflectionForm,
};
use crate::matword;
use crate::rmat::{build_p, build_rplus, check_hecke, check_yang_baxter, CMatrix};
use crate::star::{check_involutivity, star_det_residual, verify_star_closure, StarForm, StarMap};
use crate::{Algebra, QRing, Ring, Scalar};

pub const REPORT_VERSION: &str = "1";

/// Deliberate faults, each aimed at one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NegativeControl {
    /// The lambda entry of R+ is replaced by 1.
    CorruptedR,
    /// Compact star with X+ and X- fixed instead of exchanged.
    FlippedStar,
    /// The constant term of the g22*g11 rule is dropped before the confluence run.
    DroppedLambda,
}

impl NegativeControl {
    pub fn target(self) -> &'static str {
        match self {
            NegativeControl::CorruptedR => "yang-baxter",
            NegativeControl::FlippedStar => "star-scalar-compact",
            NegativeControl::DroppedLambda => "confluence",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Ranks for the R-matrix checks; the algebra itself is built for n = 2.
    pub n_values: Vec<usize>,
    pub seed: u64,
    pub confluence_trials: u64,
    pub confluence_max_degree: usize,
    pub involution_trials: u64,
    pub depth: usize,
    pub evolve_steps: Vec<usize>,
    /// Check ids to run; `None` runs all. Dependencies of selected checks
    /// are not added automatically and count as skipped.
    pub checks: Option<Vec<String>>,
    pub control: Option<NegativeControl>,
    /// Record wall times (makes reports differ between runs).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_values: vec![2, 3],
            seed: 20_240_917,
            confluence_trials: 1000,
            confluence_max_degree: 5,
            involution_trials: 50,
            depth: 12,
            evolve_steps: vec![1, 2, 3],
            checks: None,
            control: None,
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(src: &str) -> Result<Self> {
        let cfg: SuiteConfig = serde_json::from_str(src).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.iter().any(|&n| n < 2) {
            return Err(Error::Config("n_values must be >= 2".into()));
        }
        if self.depth == 0 {
            return Err(Error::Config("depth must be >= 1".into()));
        }
        if self.confluence_max_degree == 0 {
            return Err(Error::Config("confluence_max_degree must be >= 1".into()));
        }
        if let Some(sel) = &self.checks {
            for id in sel {
                if !CHECKS.iter().any(|c| c.id == id) {
                    return Err(Error::Config(format!("unknown check `{id}`")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Deferred,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub section: String,
    pub status: Status,
    pub details: Value,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: SuiteConfig,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

struct Ctx {
    cfg: SuiteConfig,
    algebra: OnceLock<Algebra>,
}

impl Ctx {
    fn rplus(&self, n: usize) -> Result<CMatrix<Scalar>> {
        let mut r = build_rplus::<Scalar>(n)?;
        if self.cfg.control == Some(NegativeControl::CorruptedR) {
            // lambda sits at row (1,2), column (2,1)
            let v = r.get(0, 0).clone() * Scalar::q().inv_unit()?;
            r.set(1, n, v);
        }
        Ok(r)
    }

    fn rminus(&self, n: usize) -> Result<CMatrix<Scalar>> {
        let p = build_p::<Scalar>(n)?;
        Ok(&(&p * &self.rplus(n)?.inverse()?) * &p)
    }

    fn alg(&self) -> Result<&Algebra> {
        self.algebra
            .get()
            .ok_or_else(|| Error::Config("algebra was not assembled".into()))
    }
}

struct Outcome {
    pass: bool,
    details: Value,
}

fn outcome(pass: bool, details: Value) -> Result<Outcome> {
    Ok(Outcome { pass, details })
}

struct CheckDef {
    id: &'static str,
    section: &'static str,
    deps: &'static [&'static str],
    seeded: bool,
    run: fn(&Ctx) -> Result<Outcome>,
}

const CHECKS: &[CheckDef] = &[
    CheckDef { id: "yang-baxter", section: "r-matrix", deps: &[], seeded: false, run: yang_baxter },
    CheckDef { id: "rminus", section: "r-matrix", deps: &["yang-baxter"], seeded: false, run: rminus },
    CheckDef { id: "assembly", section: "algebra", deps: &["rminus"], seeded: false, run: assembly },
    CheckDef { id: "self-consistency", section: "algebra", deps: &["assembly"], seeded: false, run: self_consistency },
    CheckDef { id: "confluence", section: "algebra", deps: &["assembly"], seeded: true, run: confluence },
    CheckDef { id: "det-central", section: "algebra", deps: &["assembly"], seeded: false, run: det_central },
    CheckDef { id: "det-omega", section: "algebra", deps: &["assembly"], seeded: false, run: det_omega },
    CheckDef { id: "jimbo-drinfeld", section: "algebra", deps: &["assembly"], seeded: false, run: jimbo_drinfeld },
    CheckDef { id: "omega-reflection", section: "algebra", deps: &["assembly"], seeded: false, run: omega_reflection },
    CheckDef { id: "cross-tier", section: "algebra", deps: &["assembly"], seeded: false, run: cross_tier },
    CheckDef { id: "star-scalar-compact", section: "compact-form", deps: &["assembly"], seeded: true, run: star_scalar_compact },
    CheckDef { id: "star-matrix-compact", section: "compact-form", deps: &[], seeded: false, run: star_matrix_compact },
    CheckDef { id: "star-scalar-hyperboloid", section: "hyperboloid-form", deps: &["assembly"], seeded: true, run: star_scalar_hyperboloid },
    CheckDef { id: "star-matrix-hyperboloid", section: "hyperboloid-form", deps: &[], seeded: false, run: star_matrix_hyperboloid },
    CheckDef { id: "sigma-reflection", section: "hyperboloid-form", deps: &["assembly"], seeded: false, run: sigma_reflection },
    CheckDef { id: "omega-sigma-commute", section: "hyperboloid-form", deps: &["assembly"], seeded: false, run: omega_sigma_commute },
    CheckDef { id: "star-det", section: "hyperboloid-form", deps: &["assembly"], seeded: false, run: star_det },
    CheckDef { id: "evolve", section: "dynamics", deps: &[], seeded: false, run: evolve },
    CheckDef { id: "wznw", section: "monodromy", deps: &[], seeded: false, run: wznw },
];

/// All check ids in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn yang_baxter(ctx: &Ctx) -> Result<Outcome> {
    let mut reports = Vec::new();
    for &n in &ctx.cfg.n_values {
        reports.push(check_yang_baxter(&ctx.rplus(n)?)?);
    }
    outcome(reports.iter().all(|r| r.holds), json!({ "ranks": reports }))
}

fn rminus(ctx: &Ctx) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut pass = true;
    for &n in &ctx.cfg.n_values {
        let rp = ctx.rplus(n)?;
        let rm = ctx.rminus(n)?;
        let dagger = rp.dagger().first_difference(&rm);
        let hecke = check_hecke(&rp)?;
        pass &= dagger.is_none();
        rows.push(json!({
            "n": n,
            "rminus": rm.render_rows(),
            "dagger_equals_rminus": dagger.is_none(),
            "witness": dagger.map(|(r, c, v)| (r, c, v.render())),
            "hecke": { "alpha": hecke.alpha.render(), "beta": hecke.beta.render() },
        }));
    }
    outcome(pass, json!({ "ranks": rows }))
}

fn assembly(ctx: &Ctx) -> Result<Outcome> {
    let alg = Algebra::with_rmatrices(ctx.rplus(2)?, ctx.rminus(2)?)?;
    let unresolved = alg.unresolved()?;
    let details = json!({
        "relations": alg.relations().len(),
        "rules": alg.system().len(),
        "presentation_rules": alg.presentation().len(),
        "unresolved_critical_pairs": unresolved.len(),
    });
    let pass = unresolved.is_empty();
    let _ = ctx.algebra.set(alg);
    outcome(pass, details)
}

fn identity_outcome(checks: Vec<crate::heisenberg::IdentityCheck>) -> Result<Outcome> {
    let failed: Vec<_> = checks.iter().filter(|c| !c.holds).cloned().collect();
    outcome(failed.is_empty(), json!({ "checked": checks.len(), "failed": failed }))
}

fn self_consistency(ctx: &Ctx) -> Result<Outcome> {
    identity_outcome(check_self_consistency(ctx.alg()?)?)
}

/// Drops the lower-degree part of the g22*g11 rule.
pub fn drop_lambda_term(sys: &RewriteSystem<Scalar>) -> RewriteSystem<Scalar> {
    let lhs = [Letter::G(1, 1), Letter::G(0, 0)];
    let mut out = sys.clone();
    if let Some(rhs) = out.remove_rule(&lhs) {
        let kept = rhs
            .terms()
            .filter(|(w, _)| w.len() == lhs.len())
            .fold(NCPoly::zero(), |acc, (w, c)| acc + NCPoly::monomial(c.clone(), w.clone()));
        out.insert_rule(RewriteRule {
            lhs: crate::Word(lhs.to_vec()),
            rhs: kept,
        });
    }
    out
}

fn confluence(ctx: &Ctx) -> Result<Outcome> {
    let alg = ctx.alg()?;
    let sys = match ctx.cfg.control {
        Some(NegativeControl::DroppedLambda) => drop_lambda_term(alg.system()),
        _ => alg.system().clone(),
    };
    let report = check_local_confluence(&sys, ctx.cfg.confluence_max_degree, ctx.cfg.confluence_trials, ctx.cfg.seed)?;
    let mut details = to_value(&report);
    // keep the report small: the first few mismatches are enough as witnesses
    if let Some(m) = details.get_mut("mismatches").and_then(Value::as_array_mut) {
        m.truncate(5);
    }
    details["mismatch_count"] = json!(report.mismatches.len());
    outcome(report.passed(), details)
}

fn det_central(ctx: &Ctx) -> Result<Outcome> {
    identity_outcome(check_det_central(ctx.alg()?)?)
}

fn det_omega(ctx: &Ctx) -> Result<Outcome> {
    identity_outcome(check_det_omega(ctx.alg()?)?)
}

fn jimbo_drinfeld(ctx: &Ctx) -> Result<Outcome> {
    let checks = check_jimbo_drinfeld(ctx.alg()?)?;
    let pass = checks.iter().all(|c| c.holds);
    outcome(pass, json!({ "identities": checks }))
}

fn omega_reflection(ctx: &Ctx) -> Result<Outcome> {
    let alg = ctx.alg()?;
    let refl = MatrixCheck::from_residual("omega-reflection", &reflection_residual(alg, &alg.omega, ReflectionForm::Omega)?);
    let mixed = MatrixCheck::from_residual("g-omega", &g_omega_residual(alg)?);
    outcome(refl.holds && mixed.holds, json!({ "checks": [refl, mixed] }))
}

fn cross_tier(ctx: &Ctx) -> Result<Outcome> {
    let entries = matword::cross_tier_check(ctx.alg()?)?;
    let pass = !entries.is_empty() && entries.iter().all(|e| e.check.holds);
    outcome(pass, json!({ "rules": entries }))
}

fn star_scalar(ctx: &Ctx, map: StarMap<Scalar>) -> Result<Outcome> {
    let alg = ctx.alg()?;
    let closure = verify_star_closure(&map, alg)?;
    let inv = check_involutivity(&map, alg, ctx.cfg.involution_trials, ctx.cfg.seed)?;
    let failed: Vec<_> = closure
        .entries
        .iter()
        .filter(|e| e.status == crate::star::ClosureStatus::Fail)
        .take(5)
        .collect();
    let pass = closure.passed() && inv.failures.is_empty();
    outcome(
        pass,
        json!({
            "pass": closure.count(crate::star::ClosureStatus::Pass),
            "fail": closure.count(crate::star::ClosureStatus::Fail),
            "deferred_to_matrix_tier": closure.count(crate::star::ClosureStatus::Deferred),
            "failures": failed,
            "involutivity": inv,
        }),
    )
}

/// Compact map with X+ and X- fixed, used by the flipped-star control.
pub fn flipped_compact_map() -> StarMap<Scalar> {
    StarMap::compact()
        .with_image(Letter::Xp, NCPoly::letter(Letter::Xp))
        .with_image(Letter::Xm, NCPoly::letter(Letter::Xm))
}

fn star_scalar_compact(ctx: &Ctx) -> Result<Outcome> {
    let map = match ctx.cfg.control {
        Some(NegativeControl::FlippedStar) => flipped_compact_map(),
        _ => StarMap::compact(),
    };
    star_scalar(ctx, map)
}

fn star_scalar_hyperboloid(ctx: &Ctx) -> Result<Outcome> {
    star_scalar(ctx, StarMap::hyperboloid())
}

fn star_matrix(ctx: &Ctx, form: StarForm) -> Result<Outcome> {
    let r = matword::verify_involution_consistency::<Scalar>(form, ctx.cfg.depth)?;
    outcome(r.passed(), to_value(&r))
}

fn star_matrix_compact(ctx: &Ctx) -> Result<Outcome> {
    star_matrix(ctx, StarForm::Compact)
}

fn star_matrix_hyperboloid(ctx: &Ctx) -> Result<Outcome> {
    star_matrix(ctx, StarForm::Hyperboloid)
}

fn sigma_reflection(ctx: &Ctx) -> Result<Outcome> {
    let alg = ctx.alg()?;
    let star_form = MatrixCheck::from_residual("sigma-reflection", &reflection_residual(alg, &alg.sigma, ReflectionForm::Sigma)?);
    // the Omega-shaped equation is evaluated for information only
    let literal = MatrixCheck::from_residual("sigma-reflection-literal", &reflection_residual(alg, &alg.sigma, ReflectionForm::Omega)?);
    outcome(star_form.holds, json!({ "check": star_form, "literal_form": literal }))
}

fn omega_sigma_commute(ctx: &Ctx) -> Result<Outcome> {
    identity_outcome(check_omega_sigma_commute(ctx.alg()?)?)
}

fn star_det(ctx: &Ctx) -> Result<Outcome> {
    let r = star_det_residual(&StarMap::hyperboloid(), ctx.alg()?)?;
    outcome(r.is_zero(), json!({ "residual": r.render() }))
}

fn evolve(ctx: &Ctx) -> Result<Outcome> {
    let mut reports = Vec::new();
    for &n in &ctx.cfg.evolve_steps {
        reports.push(matword::evolve_check::<Scalar>(n, ctx.cfg.depth)?);
    }
    outcome(reports.iter().all(|r| r.passed()), json!({ "steps": reports }))
}

fn wznw(ctx: &Ctx) -> Result<Outcome> {
    let r = matword::wznw_periodicity_check::<Scalar>(ctx.cfg.depth)?;
    outcome(r.obligation.proved(), to_value(&r))
}

fn run_one(def: &CheckDef, ctx: &Ctx) -> CheckReport {
    let start = Instant::now();
    let (status, mut details) = match (def.run)(ctx) {
        Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.details),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    if ctx.cfg.timings {
        details["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    CheckReport {
        id: def.id.into(),
        section: def.section.into(),
        status,
        details,
        seed: def.seeded.then_some(ctx.cfg.seed),
    }
}

/// Runs the selected checks. Checks whose dependencies did not pass are
/// reported as skipped. Ready checks run in parallel, layer by layer; the
/// report keeps the fixed check order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let selected: Vec<&CheckDef> = CHECKS
        .iter()
        .filter(|c| cfg.checks.as_ref().is_none_or(|s| s.iter().any(|id| id == c.id)))
        .collect();
    let ctx = Ctx {
        cfg: cfg.clone(),
        algebra: OnceLock::new(),
    };
    let mut done: Vec<Option<CheckReport>> = vec![None; selected.len()];
    loop {
        let status_of = |id: &str| -> Option<Status> {
            selected
                .iter()
                .position(|c| c.id == id)
                .map(|k| done[k].as_ref().map(|r| r.status))
                .unwrap_or(Some(Status::Skipped))
        };
        let mut ready = Vec::new();
        let mut skipped = Vec::new();
        for (k, def) in selected.iter().enumerate() {
            if done[k].is_some() {
                continue;
            }
            let deps: Vec<Option<Status>> = def.deps.iter().map(|d| status_of(d)).collect();
            if deps.iter().all(|s| *s == Some(Status::Pass)) {
                ready.push(k);
            } else if deps.iter().all(Option::is_some) {
                let blocking: Vec<&str> = def
                    .deps
                    .iter()
                    .zip(&deps)
                    .filter(|(_, s)| **s != Some(Status::Pass))
                    .map(|(d, _)| *d)
                    .collect();
                skipped.push((k, blocking));
            }
        }
        if ready.is_empty() && skipped.is_empty() {
            break;
        }
        for (k, blocking) in skipped {
            let def = selected[k];
            done[k] = Some(CheckReport {
                id: def.id.into(),
                section: def.section.into(),
                status: Status::Skipped,
                details: json!({ "blocked_by": blocking }),
                seed: def.seeded.then_some(cfg.seed),
            });
        }
        let results: Vec<(usize, CheckReport)> = ready.par_iter().map(|&k| (k, run_one(selected[k], &ctx))).collect();
        for (k, r) in results {
            done[k] = Some(r);
        }
    }
    Ok(SuiteReport {
        version: REPORT_VERSION.into(),
        config: cfg.clone(),
        checks: done.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_selection_gives_empty_report() {
        let cfg = SuiteConfig {
            checks: Some(vec![]),
            ..SuiteConfig::default()
        };
        let r = run_suite(&cfg).unwrap();
        assert!(r.checks.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn unknown_check_is_a_config_error() {
        let err = SuiteConfig::from_json(r#"{"checks": ["nope"]}"#).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn unselected_dependency_skips() {
        let cfg = SuiteConfig {
            checks: Some(vec!["det-central".into()]),
            ..SuiteConfig::default()
        };
        let r = run_suite(&cfg).unwrap();
        assert_eq!(r.checks[0].status, Status::Skipped);
    }

    #[test]
    fn corrupted_r_entry_differs_from_lambda() {
        let ctx = Ctx {
            cfg: SuiteConfig {
                control: Some(NegativeControl::CorruptedR),
                ..SuiteConfig::default()
            },
            algebra: OnceLock::new(),
        };
        let clean = build_rplus::<Scalar>(2).unwrap();
        let bad = ctx.rplus(2).unwrap();
        assert_eq!(clean.first_difference(&bad).map(|(r, c, _)| (r, c)), Some((1, 2)));
        assert!(!num_traits::One::is_one(bad.get(1, 2)));
    }
}
