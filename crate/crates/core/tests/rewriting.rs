use num_traits::{One, Zero};
use tgq_core::freealg::{
    check_local_confluence, complete, critical_pairs, orient, unresolved_pairs, Strategy,
};
use tgq_core::{Algebra, Error, Letter, NCPoly, Poly, QRing, Ring, Scalar, System, Word};

fn l(x: Letter) -> Poly {
    NCPoly::letter(x)
}

fn s(x: Scalar) -> Poly {
    NCPoly::constant(x)
}

const A: Letter = Letter::G(0, 0);
const B: Letter = Letter::G(0, 1);
const C: Letter = Letter::G(1, 0);
const D: Letter = Letter::G(1, 1);

fn alg() -> Algebra {
    Algebra::sl2().unwrap()
}

/// Entry (r, c) of R+ g1 g2 - g2 g1 R+ for n = 2, computed from index sums
/// with the unnormalized R+ (the overall factor cancels).
fn rgg_entry(r: usize, c: usize) -> Poly {
    let q = Scalar::q();
    let rp = |i: usize, j: usize| -> Scalar {
        match (i, j) {
            (0, 0) | (3, 3) => q.clone(),
            (1, 1) | (2, 2) => Scalar::one(),
            (1, 2) => Scalar::lambda(),
            _ => Scalar::zero(),
        }
    };
    let g = |i: usize, j: usize| l(Letter::G(i as u8, j as u8));
    // (g1)_{(i,k),(j,l)} = g_ij d_kl, (g2)_{(i,k),(j,l)} = d_ij g_kl
    let g1g2 = |a: usize, b: usize| g(a / 2, b / 2) * g(a % 2, b % 2);
    let g2g1 = |a: usize, b: usize| g(a % 2, b % 2) * g(a / 2, b / 2);
    let mut out = Poly::zero();
    for k in 0..4 {
        out = out + g1g2(k, c).scale(&rp(r, k)) - g2g1(r, k).scale(&rp(k, c));
    }
    out
}

#[test]
fn gg_exchange_orientation_agrees_with_brute_force_expansion() {
    // entry ((1,1),(1,2)) involves only a and b
    let e = rgg_entry(0, 1);
    let expected = (l(A) * l(B)).scale(&Scalar::q()) - l(B) * l(A);
    assert_eq!(e, expected);
    let sys = alg();
    assert_eq!(sys.nf(&(l(B) * l(A))).unwrap(), (l(A) * l(B)).scale(&Scalar::q()));
    assert_eq!(sys.nf(&(l(A) * l(B))).unwrap(), l(A) * l(B));
}

#[test]
fn every_brute_force_entry_vanishes_in_normal_form() {
    let a = alg();
    for r in 0..4 {
        for c in 0..4 {
            assert!(a.nf(&rgg_entry(r, c)).unwrap().is_zero(), "entry ({r}, {c})");
        }
    }
}

#[test]
fn identity_and_inverse_pair() {
    let a = alg();
    assert_eq!(a.nf(&Poly::one()).unwrap(), Poly::one());
    assert_eq!(a.nf(&(l(Letter::K) * l(Letter::Kinv))).unwrap(), Poly::one());
    assert_eq!(a.nf(&(l(Letter::Kinv) * l(Letter::K))).unwrap(), Poly::one());
}

#[test]
fn orient_puts_larger_word_on_the_left() {
    let rel = l(Letter::Xp) * l(Letter::K) - (l(Letter::K) * l(Letter::Xp)).scale(&Scalar::q());
    let rule = orient(&rel, &System::new()).unwrap();
    assert_eq!(rule.lhs, Word(vec![Letter::Xp, Letter::K]));
    assert_eq!(rule.rhs, (l(Letter::K) * l(Letter::Xp)).scale(&Scalar::q()));
}

#[test]
fn orient_scales_by_inverse_leading_coefficient() {
    let two = Scalar::from_int(2);
    let rel = (l(D) * l(A)).scale(&two) - l(A) * l(D) - s(Scalar::one());
    let rule = orient(&rel, &System::new()).unwrap();
    let half = two.inv_unit().unwrap();
    assert_eq!(rule.lhs, Word(vec![D, A]));
    assert_eq!(rule.rhs, (l(A) * l(D) + s(Scalar::one())).scale(&half));
}

#[test]
fn determinant_relation_orients_on_cb() {
    // deg-lex: c*b is the largest word of a*d - q^-1*b*c... once c*b is present
    let qi = Scalar::q().inv_unit().unwrap();
    let rel = l(A) * l(D) - (l(C) * l(B)).scale(&qi) - s(Scalar::one());
    let rule = orient(&rel, &System::new()).unwrap();
    assert_eq!(rule.lhs, Word(vec![C, B]));
}

#[test]
fn zero_relation_is_not_orientable() {
    assert!(matches!(orient(&Poly::zero(), &System::new()), Err(Error::NotOrientable { .. })));
}

#[test]
fn non_unit_leading_coefficient_is_not_orientable() {
    let one_plus_q = Scalar::one() + Scalar::q();
    let rel = (l(B) * l(A)).scale(&one_plus_q) - l(A) * l(B);
    match orient(&rel, &System::new()) {
        Err(Error::NotOrientable { reason, .. }) => assert!(reason.contains("not a unit")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn rules_strictly_decrease_the_order() {
    for r in alg().system().rules() {
        for (w, _) in r.rhs.terms() {
            assert!(*w < r.lhs, "{}", r.render());
        }
    }
}

#[test]
fn assembled_system_has_no_unresolved_overlaps() {
    let a = alg();
    assert!(!critical_pairs(a.system()).is_empty());
    assert!(unresolved_pairs(a.system()).unwrap().is_empty());
}

#[test]
fn confluent_system_is_unchanged_by_completion() {
    let a = alg();
    let done = complete(a.system(), 3).unwrap();
    assert_eq!(done.rules(), a.system().rules());
}

#[test]
fn completion_of_empty_system_is_empty() {
    assert!(complete(&System::new(), 2).unwrap().is_empty());
}

#[test]
fn completion_recovers_a_removed_exchange_rule() {
    let a = alg();
    for lhs in [[C, B], [B, A], [D, A]] {
        let mut sys = a.system().clone();
        let original = sys.remove_rule(&lhs).expect("rule present");
        assert!(!unresolved_pairs(&sys).unwrap().is_empty());
        let done = complete(&sys, 5).unwrap();
        assert_eq!(done.rule(&lhs), Some(&original), "{lhs:?}");
        assert_eq!(done.len(), a.system().len());
    }
}

#[test]
fn cb_rule_is_independent_of_the_other_unimodular_g_rules() {
    let a = alg();
    let mut sys = System::new();
    for r in a.system().rules() {
        let only_g = r.lhs.letters().iter().all(|x| matches!(x, Letter::G(..)));
        if only_g && r.lhs != Word(vec![C, B]) {
            sys.add_relation(&r.relation()).unwrap();
        }
    }
    assert_eq!(sys.len(), 6);
    assert_eq!(complete(&sys, 4).unwrap().rules(), sys.rules());
}

#[test]
fn braid_relation_completion_diverges() {
    // positive braid monoid on two strands: no finite deg-lex basis
    let (x, y) = (l(Letter::K), l(Letter::Xp));
    let rel = y.clone() * x.clone() * y.clone() - x.clone() * y * x;
    let mut sys = System::new();
    sys.add_relation(&rel).unwrap();
    assert!(matches!(complete(&sys, 4), Err(Error::CompletionDiverged(_))));
}

#[test]
fn empty_system_is_trivially_confluent() {
    let r = check_local_confluence(&System::new(), 5, 100, 7).unwrap();
    assert!(r.passed());
    assert_eq!(r.words_checked, 0);
}

#[test]
fn assembled_system_passes_the_randomized_confluence_check() {
    let r = check_local_confluence(alg().system(), 5, 1000, 11).unwrap();
    assert!(r.passed(), "{:?}", r.mismatches.first());
    assert_eq!(r.words_checked, 1000);
}

#[test]
fn dropping_the_constant_of_the_da_rule_breaks_confluence() {
    let sys = tgq_core::verify::drop_lambda_term(alg().system());
    let r = check_local_confluence(&sys, 5, 1000, 11).unwrap();
    assert!(!r.passed());
    let m = &r.mismatches[0];
    assert_ne!(m.leftmost, m.rightmost);
}

#[test]
fn confluence_report_does_not_depend_on_thread_count() {
    let a = alg();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| check_local_confluence(&tgq_core::verify::drop_lambda_term(a.system()), 4, 300, 3).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn budget_exhaustion_is_an_error() {
    let sys = alg().system().clone().with_budget(3);
    let w = l(D).pow(3) * l(A).pow(3);
    assert!(matches!(sys.nf(&w), Err(Error::BudgetExceeded(3))));
}

#[test]
fn both_strategies_agree_on_a_long_word() {
    let a = alg();
    let w = l(D) * l(Letter::Xp) * l(C) * l(Letter::K) * l(B) * l(A);
    let left = a.system().nf_with(&w, Strategy::Leftmost).unwrap();
    let right = a.system().nf_with(&w, Strategy::Rightmost).unwrap();
    assert_eq!(left, right);
}

#[test]
fn rule_listing_matches_golden_file() {
    let golden = include_str!("golden/sl2_rules.txt");
    let rendered: Vec<String> = alg().system().rules().iter().map(|r| r.render()).collect();
    assert_eq!(golden.lines().collect::<Vec<_>>(), rendered);
}
