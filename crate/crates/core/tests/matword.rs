use tgq_core::matword::{
    corrupted_compact_table, corrupted_monodromy_table, cross_tier_check, evolve_check, expand, free_reduce,
    parse_equation, parse_word, render_word, verify_involution_consistency, verify_involution_with,
    wznw_periodicity_check, wznw_with, DaggerTable, MatEquation, MatWord, Prover, ProverConfig, RuleBase,
    RuleOrigin,
};
use tgq_core::star::StarForm;
use tgq_core::{Algebra, Error, Scalar};

fn word(s: &str) -> MatWord<Scalar> {
    MatWord::new(parse_word(s).unwrap())
}

fn eq(s: &str) -> MatEquation<Scalar> {
    parse_equation(s).unwrap()
}

fn prover() -> Prover<Scalar> {
    Prover::new(RuleBase::standard(), ProverConfig::default()).unwrap()
}

#[test]
fn hyperboloid_dagger_of_exchange_word() {
    let t = DaggerTable::new(StarForm::Hyperboloid);
    assert_eq!(t.dagger_word(&word("R+ g1 g2")).render(), "g2 g1 R-");
}

#[test]
fn hyperboloid_dagger_of_right_variable_definition() {
    // (Sp^-1 g^-1 Op)^dagger = Sm^-1 g^-1 Om, the other definition of h
    let t = DaggerTable::new(StarForm::Hyperboloid);
    assert_eq!(t.dagger_word(&word("Sp^-1 g^-1 Op")).syms, parse_word("Sm^-1 g^-1 Om").unwrap());
}

#[test]
fn compact_dagger_swaps_omega_plus_and_minus() {
    let t = DaggerTable::new(StarForm::Compact);
    assert_eq!(t.dagger_word(&word("Op1")).render(), "Om1");
    assert_eq!(t.dagger_word(&word("g h")).render(), "g h");
}

#[test]
fn dagger_is_involutive_on_every_symbol() {
    for form in [StarForm::Compact, StarForm::Hyperboloid] {
        let t = DaggerTable::new(form);
        for s in ["g", "h1", "Op2", "Om", "Sp1", "Sm^-1", "Omega", "Sigma2", "ML", "MR", "R+", "R-^-1", "P"] {
            assert!(t.is_involutive_on(&parse_word(s).unwrap()), "{form}: {s}");
        }
    }
}

#[test]
fn composite_symbols_expand() {
    assert_eq!(render_word(&expand(&parse_word("Omega").unwrap())), "Op Om^-1");
    assert_eq!(render_word(&expand(&parse_word("MR^-1").unwrap())), "Sm Sp^-1");
}

#[test]
fn free_reduction_cancels_adjacent_inverses() {
    let w = parse_word("g Op Op^-1 g^-1 R+").unwrap();
    assert_eq!(render_word(&free_reduce(&w)), "R+");
}

#[test]
fn rule_base_contents() {
    let base: RuleBase<Scalar> = RuleBase::standard();
    assert!(base.get("gg+").is_some());
    assert!(base.get("g-omega").is_some());
    let gen = base.get("sm-sp").unwrap();
    assert_eq!(gen.origin, RuleOrigin::Generated("op-om".into()));
    assert_eq!(base.rules().iter().filter(|r| r.origin == RuleOrigin::Transcribed).count(), 27);
}

#[test]
fn base_rule_is_proved_in_one_step() {
    let t = prover().prove(&eq("R+ g1 g2 = g2 g1 R+")).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.rules_used(), ["gg+"]);
}

#[test]
fn identical_sides_need_no_steps() {
    let t = prover().prove(&eq("g Op = g Op")).unwrap();
    assert!(t.is_empty());
}

#[test]
fn dagger_of_gg_exchange_is_short() {
    let t = DaggerTable::new(StarForm::Hyperboloid);
    let p = prover();
    let e = t.dagger_equation(&p.base().get("gg+").unwrap().eq);
    let trace = p.prove(&e).unwrap();
    assert!(trace.len() <= 3, "{}", trace.len());
    p.replay(&trace).unwrap();
}

#[test]
fn tampered_trace_fails_replay() {
    let p = prover();
    let mut t = p.prove(&eq("R+ Op1 g2 = g2 Op1")).unwrap();
    assert!(!t.is_empty());
    let step = t.lhs_steps.first_mut().or(t.rhs_steps.first_mut()).unwrap();
    step.position += 1;
    assert!(p.replay(&t).is_err());
}

#[test]
fn unrelated_words_are_not_proved() {
    match prover().prove(&eq("g = h")) {
        Err(Error::NotProved { reason, .. }) => assert!(!reason.is_empty()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn trace_serializes_without_internal_indices() {
    let t = prover().prove(&eq("R+ g1 g2 = g2 g1 R+")).unwrap();
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v["lhs"], "R+ g1 g2");
    let step = &v["lhs_steps"].as_array().unwrap().iter().chain(v["rhs_steps"].as_array().unwrap()).next().unwrap().clone();
    assert_eq!(step["rule"], "gg+");
    assert!(step.get("rule_index").is_none());
}

#[test]
fn hyperboloid_involution_is_consistent() {
    let r = verify_involution_consistency::<Scalar>(StarForm::Hyperboloid, 12).unwrap();
    assert!(r.passed(), "{:?}", r.not_proved());
    assert_eq!(r.obligations.len(), 29);
    assert_eq!(r.samples.len(), 3);
    assert!(r.samples.iter().all(|s| s.holds));
    assert_eq!(r.printed_audit.len(), 2);
}

#[test]
fn compact_involution_is_consistent() {
    let r = verify_involution_consistency::<Scalar>(StarForm::Compact, 12).unwrap();
    assert!(r.passed(), "{:?}", r.not_proved());
    assert!(r.samples.is_empty());
}

#[test]
fn corrupted_compact_table_leaves_obligations_unproved() {
    let r = verify_involution_with::<Scalar>(&corrupted_compact_table(), 8).unwrap();
    assert!(!r.passed());
    assert!(!r.not_proved().is_empty());
}

#[test]
fn evolved_variables_stay_hermitian() {
    for n in 0..=3 {
        let r = evolve_check::<Scalar>(n, 12).unwrap();
        assert!(r.passed(), "n = {n}: {:?} {:?}", r.g.reason, r.omega.reason);
    }
}

#[test]
fn monodromy_combination_is_hermitian() {
    let r = wznw_periodicity_check::<Scalar>(12).unwrap();
    assert!(r.obligation.proved());
}

#[test]
fn fixed_left_monodromy_is_not_hermitian() {
    let r = wznw_with::<Scalar>(&corrupted_monodromy_table(), "g", 8).unwrap();
    assert!(!r.obligation.proved());
}

#[test]
fn realizable_rules_hold_entrywise() {
    let a = Algebra::sl2().unwrap();
    let entries = cross_tier_check(&a).unwrap();
    assert_eq!(entries.len(), 13);
    assert!(entries.iter().all(|e| e.check.holds), "{:?}", entries.iter().find(|e| !e.check.holds));
}
