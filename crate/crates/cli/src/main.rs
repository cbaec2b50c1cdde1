use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tgq_cli::expr::{eval, parse_expr, Context};
use tgq_core::star::{StarForm, StarMap};
use tgq_core::verify::{run_suite, CheckReport, Status, SuiteConfig, SuiteReport};
use tgq_core::{Algebra, Error};

#[derive(Parser)]
#[command(name = "tgq", version, about = "Exact checks for the q-deformed cotangent bundle of SL(2)")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Show the extracted relations and the rewrite rules.
    Relations {
        #[arg(long)]
        print: bool,
    },
    /// Normal form of an expression (read from stdin when omitted).
    Nf {
        expr: Option<String>,
        /// Star structure used by dag(...).
        #[arg(long, value_enum, default_value_t = Form::Hyperboloid)]
        form: Form,
    },
    /// Run a single check.
    Check {
        #[command(subcommand)]
        check: CheckCmd,
    },
    /// Run the whole suite.
    Suite {
        /// JSON file with suite parameters; defaults are used when omitted.
        #[arg(long)]
        config: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Compact,
    Hyperboloid,
}

impl From<Form> for StarForm {
    fn from(f: Form) -> Self {
        match f {
            Form::Compact => StarForm::Compact,
            Form::Hyperboloid => StarForm::Hyperboloid,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Tier {
    Scalar,
    Matrix,
}

#[derive(Subcommand)]
enum CheckCmd {
    YangBaxter {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    Rminus {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    DetCentral,
    JimboDrinfeld,
    Confluence {
        #[arg(long, default_value_t = 5)]
        maxdeg: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    Star {
        #[arg(long, value_enum)]
        form: Form,
        #[arg(long, value_enum, default_value_t = Tier::Matrix)]
        tier: Tier,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    Evolve {
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    Wznw {
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
}

const ALGEBRA_DEPS: &[&str] = &["yang-baxter", "rminus", "assembly"];

/// Suite configuration running `ids` after the given prerequisites.
fn selection(cfg: SuiteConfig, deps: &[&str], ids: &[&str]) -> SuiteConfig {
    SuiteConfig {
        checks: Some(deps.iter().chain(ids).map(|s| s.to_string()).collect()),
        ..cfg
    }
}

fn check_config(c: &CheckCmd) -> SuiteConfig {
    let d = SuiteConfig {
        n_values: vec![2],
        ..SuiteConfig::default()
    };
    match *c {
        CheckCmd::YangBaxter { n } => selection(SuiteConfig { n_values: vec![n], ..d }, &[], &["yang-baxter"]),
        CheckCmd::Rminus { n } => selection(SuiteConfig { n_values: vec![n], ..d }, &["yang-baxter"], &["rminus"]),
        CheckCmd::DetCentral => selection(d, ALGEBRA_DEPS, &["det-central", "det-omega"]),
        CheckCmd::JimboDrinfeld => selection(d, ALGEBRA_DEPS, &["jimbo-drinfeld"]),
        CheckCmd::Confluence { maxdeg, trials, seed } => {
            let cfg = SuiteConfig {
                confluence_max_degree: maxdeg,
                confluence_trials: trials,
                seed: seed.unwrap_or(d.seed),
                ..d
            };
            selection(cfg, ALGEBRA_DEPS, &["confluence"])
        }
        CheckCmd::Star { form, tier, depth } => {
            let cfg = SuiteConfig { depth, ..d };
            match (tier, form) {
                (Tier::Matrix, Form::Compact) => selection(cfg, &[], &["star-matrix-compact"]),
                (Tier::Matrix, Form::Hyperboloid) => selection(cfg, &[], &["star-matrix-hyperboloid"]),
                (Tier::Scalar, Form::Compact) => selection(cfg, ALGEBRA_DEPS, &["star-scalar-compact"]),
                (Tier::Scalar, Form::Hyperboloid) => selection(
                    cfg,
                    ALGEBRA_DEPS,
                    &["star-scalar-hyperboloid", "sigma-reflection", "omega-sigma-commute", "star-det"],
                ),
            }
        }
        CheckCmd::Evolve { steps, depth } => selection(
            SuiteConfig {
                evolve_steps: vec![steps],
                depth,
                ..d
            },
            &[],
            &["evolve"],
        ),
        CheckCmd::Wznw { depth } => selection(SuiteConfig { depth, ..d }, &[], &["wznw"]),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
        Status::Deferred => "DEFER",
    }
}

/// One-line summary of the interesting part of a check's details.
fn summary(c: &CheckReport) -> String {
    let d = &c.details;
    if let Some(e) = d.get("error") {
        return format!("error: {}", e.as_str().unwrap_or_default());
    }
    if let Some(b) = d.get("blocked_by") {
        return format!("blocked by {b}");
    }
    if let Some(obs) = d.get("obligations").and_then(Value::as_array) {
        let proved = obs.iter().filter(|o| o["status"] == "proved").count();
        let longest = obs.iter().filter_map(|o| o["steps"].as_u64()).max().unwrap_or(0);
        return format!("{proved}/{} dagger images proved, longest proof {longest} steps", obs.len());
    }
    if let Some(m) = d.get("mismatch_count") {
        return format!("{} words, {m} mismatches", d["words_checked"]);
    }
    if let (Some(p), Some(f)) = (d.get("pass"), d.get("fail")) {
        return format!("{p} pass, {f} fail, {} deferred to the matrix tier", d["deferred_to_matrix_tier"]);
    }
    if let Some(o) = d.get("obligation") {
        return format!("{} in {} steps", o["status"].as_str().unwrap_or_default(), o["steps"]);
    }
    if let Some(steps) = d.get("steps").and_then(Value::as_array) {
        let parts: Vec<String> = steps
            .iter()
            .map(|s| format!("n={}: {}+{} steps", s["steps"], s["g"]["steps"], s["omega"]["steps"]))
            .collect();
        return parts.join(", ");
    }
    if let Some(f) = d.get("failed").and_then(Value::as_array) {
        return format!("{} checked, {} failed", d["checked"], f.len());
    }
    if let Some(ranks) = d.get("ranks").and_then(Value::as_array) {
        let parts: Vec<String> = ranks
            .iter()
            .map(|r| {
                let ok = r.get("holds").or_else(|| r.get("dagger_equals_rminus"));
                format!("n={}: {}", r["n"], if ok == Some(&Value::Bool(true)) { "exact" } else { "differs" })
            })
            .collect();
        return parts.join(", ");
    }
    if let Some(u) = d.get("unresolved_critical_pairs") {
        return format!("{} rules, {u} unresolved critical pairs", d["rules"]);
    }
    if let Some(ids) = d.get("identities").and_then(Value::as_array) {
        let ok = ids.iter().filter(|c| c["holds"] == true).count();
        return format!("{ok}/{} identities hold", ids.len());
    }
    if let Some(rules) = d.get("rules").and_then(Value::as_array) {
        let ok = rules.iter().filter(|c| c["check"]["holds"] == true).count();
        return format!("{ok}/{} realizable rules vanish entrywise", rules.len());
    }
    if let Some(checks) = d.get("checks").and_then(Value::as_array) {
        let ok = checks.iter().filter(|c| c["holds"] == true).count();
        return format!("{ok}/{} matrix equations hold", checks.len());
    }
    if let Some(c) = d.get("check") {
        return format!("star-image form holds: {}, literal form holds: {}", c["holds"], d["literal_form"]["holds"]);
    }
    if let Some(r) = d.get("residual") {
        return format!("residual {}", r.as_str().unwrap_or_default());
    }
    String::new()
}

fn print_report(r: &SuiteReport, as_json: bool) {
    if as_json {
        println!("{}", r.to_json());
        return;
    }
    for c in &r.checks {
        println!("{:5} {:24} [{}] {}", status_word(c.status), c.id, c.section, summary(c));
        if c.status == Status::Fail {
            println!("      {}", c.details);
        }
    }
}

fn report_exit(r: &SuiteReport, as_json: bool) -> ExitCode {
    print_report(r, as_json);
    ExitCode::from(r.exit_code() as u8)
}

fn fail(e: &Error, code: u8) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(code)
}

fn run(cli: Cli) -> ExitCode {
    match cli.cmd {
        Cmd::Relations { print: _ } => {
            let alg = match Algebra::sl2() {
                Ok(a) => a,
                Err(e) => return fail(&e, 1),
            };
            if cli.json {
                let rels: Vec<Value> = alg
                    .relations()
                    .iter()
                    .map(|r| json!({ "id": r.id, "relation": r.poly.render() }))
                    .collect();
                let rules: Vec<String> = alg.system().rules().iter().map(|r| r.render()).collect();
                println!("{}", serde_json::to_string_pretty(&json!({ "relations": rels, "rules": rules })).expect("json"));
            } else {
                println!("# relations (each = 0)");
                for r in alg.relations() {
                    println!("{:16} {}", r.id, r.poly.render());
                }
                println!("# rewrite rules");
                for r in alg.system().rules() {
                    println!("{}", r.render());
                }
            }
            ExitCode::SUCCESS
        }
        Cmd::Nf { expr, form } => {
            let src = match expr {
                Some(s) => s,
                None => {
                    let mut s = String::new();
                    if let Err(e) = std::io::stdin().read_to_string(&mut s) {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                    s
                }
            };
            let e = match parse_expr(&src) {
                Ok(e) => e,
                Err(e) => return fail(&e, 2),
            };
            let alg = match Algebra::sl2() {
                Ok(a) => a,
                Err(e) => return fail(&e, 1),
            };
            let ctx = Context {
                alg: &alg,
                star: StarMap::new(form.into()),
            };
            match eval(&e, &ctx) {
                Ok(p) => {
                    if cli.json {
                        println!("{}", json!({ "input": e.to_string(), "nf": p.render() }));
                    } else {
                        println!("{}", p.render());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e, 1),
            }
        }
        Cmd::Check { check } => match run_suite(&check_config(&check)) {
            Ok(r) => report_exit(&r, cli.json),
            Err(e) => fail(&e, 2),
        },
        Cmd::Suite { config } => {
            let cfg = match config {
                None => SuiteConfig::default(),
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(s) => match SuiteConfig::from_json(&s) {
                        Ok(c) => c,
                        Err(e) => return fail(&e, 2),
                    },
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                },
            };
            match run_suite(&cfg) {
                Ok(r) => report_exit(&r, cli.json),
                Err(e) => fail(&e, 2),
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
