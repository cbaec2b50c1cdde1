use num_traits::{One, Zero};
use tgq_core::heisenberg::{
    check_central, check_det_central, check_det_omega, check_jimbo_drinfeld, check_omega_sigma_commute,
    check_self_consistency, g_omega_residual, quantum_det, reflection_residual, MatKind, OpMatrix,
    ReflectionForm, RelationSpec, Sign,
};
use tgq_core::{Algebra, Letter, NCPoly, Poly, QRing, Scalar};

fn l(x: Letter) -> Poly {
    NCPoly::letter(x)
}

fn alg() -> Algebra {
    Algebra::sl2().unwrap()
}

fn mat(e: [Poly; 4]) -> OpMatrix<Scalar> {
    OpMatrix::from_fn(2, |r, c| e[2 * r + c].clone())
}

#[test]
fn rule_count_and_no_unresolved_pairs() {
    let a = alg();
    assert_eq!(a.system().len(), 30);
    assert!(a.unresolved().unwrap().is_empty());
}

#[test]
fn ten_exchange_relations_with_distinct_ids() {
    let cat = RelationSpec::catalog();
    assert_eq!(cat.len(), 10);
    assert_eq!(cat.iter().filter(|s| s.is_uq()).count(), 6);
    let spec = RelationSpec::by_id("op-g").unwrap();
    assert_eq!((spec.r, spec.a, spec.b, spec.trailing_r), (Sign::Plus, MatKind::OmPlus, MatKind::G, false));
}

#[test]
fn omega_matrices_match_hand_written_forms() {
    let a = alg();
    let c = Scalar::q_pow(-1, 2) * Scalar::lambda();
    let op = mat([l(Letter::Kinv), l(Letter::Xp).scale(&c), Poly::zero(), l(Letter::K)]);
    let c = -(Scalar::q_pow(1, 2) * Scalar::lambda());
    let om = mat([l(Letter::K), Poly::zero(), l(Letter::Xm).scale(&c), l(Letter::Kinv)]);
    assert_eq!(a.om_plus, op);
    assert_eq!(a.om_minus, om);
}

#[test]
fn every_extracted_relation_vanishes() {
    let r = check_self_consistency(&alg()).unwrap();
    assert!(r.len() > 30);
    assert!(r.iter().all(|c| c.holds), "{:?}", r.iter().find(|c| !c.holds));
}

#[test]
fn q_inverse_determinant_is_central() {
    let r = check_det_central(&alg()).unwrap();
    assert_eq!(r.len(), 8);
    assert!(r.iter().all(|c| c.holds));
}

#[test]
fn q_determinant_is_not_central() {
    // ad - q bc fails to commute with a, d, Xp and Xm; b and c still commute
    let a = alg();
    let g = |i, j| l(Letter::G(i, j));
    let wrong = g(0, 0) * g(1, 1) - (g(0, 1) * g(1, 0)).scale(&Scalar::q());
    let r = check_central(a.presentation(), &wrong).unwrap();
    let failing: Vec<&str> = r.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    assert_eq!(
        failing,
        ["[det_q(g), Xp]", "[det_q(g), Xm]", "[det_q(g), g[1,1]]", "[det_q(g), g[2,2]]"]
    );
}

#[test]
fn unit_determinant_in_full_system() {
    let a = alg();
    assert_eq!(a.nf(&quantum_det(&a.g).unwrap()).unwrap(), Poly::one());
    assert!(!a.presentation().nf(&quantum_det(&a.g).unwrap()).unwrap().is_one());
}

#[test]
fn omega_determinants_are_one() {
    let r = check_det_omega(&alg()).unwrap();
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|c| c.holds));
}

#[test]
fn jimbo_drinfeld_relations_from_omega_rules_alone() {
    let r = check_jimbo_drinfeld(&alg()).unwrap();
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|c| c.holds), "{r:?}");
}

#[test]
fn commutator_of_raising_and_lowering_in_normal_form() {
    // [Xp, Xm] lambda = K^2 - K^-2, checked without dividing
    let a = alg();
    let (xp, xm) = (l(Letter::Xp), l(Letter::Xm));
    let lhs = (xp.clone() * xm.clone() - xm * xp).scale(&Scalar::lambda());
    let rhs = l(Letter::K) * l(Letter::K) - l(Letter::Kinv) * l(Letter::Kinv);
    assert_eq!(a.nf(&lhs).unwrap(), a.nf(&rhs).unwrap());
}

fn mixed_residual(a: &Algebra, left: &OpMatrix<Scalar>) -> OpMatrix<Scalar> {
    // R+ A^1 Om-^2 - Om-^2 Op^1 R+
    let rp = OpMatrix::from_cmatrix(&a.rplus);
    let lhs = &(&rp * &left.embed1()) * &a.om_minus.embed2();
    let rhs = &(&a.om_minus.embed2() * &a.om_plus.embed1()) * &rp;
    a.nf_matrix(&(&lhs - &rhs)).unwrap()
}

#[test]
fn mixed_relation_with_omega_minus_in_both_slots_fails() {
    let a = alg();
    assert!(!mixed_residual(&a, &a.om_minus).is_zero());
    assert!(mixed_residual(&a, &a.om_plus).is_zero());
}

#[test]
fn omega_obeys_reflection_equation() {
    let a = alg();
    assert!(reflection_residual(&a, &a.omega, ReflectionForm::Omega).unwrap().is_zero());
    assert!(g_omega_residual(&a).unwrap().is_zero());
}

#[test]
fn sigma_obeys_only_the_star_image_reflection_form() {
    let a = alg();
    assert!(reflection_residual(&a, &a.sigma, ReflectionForm::Sigma).unwrap().is_zero());
    assert!(!reflection_residual(&a, &a.sigma, ReflectionForm::Omega).unwrap().is_zero());
}

#[test]
fn omega_and_sigma_entries_commute() {
    let r = check_omega_sigma_commute(&alg()).unwrap();
    assert_eq!(r.len(), 16);
    assert!(r.iter().all(|c| c.holds));
}

#[test]
fn inverses_are_two_sided() {
    let a = alg();
    let id = OpMatrix::identity(2);
    for (m, mi) in [(&a.g, &a.g_inv), (&a.om_plus, &a.om_plus_inv), (&a.om_minus, &a.om_minus_inv)] {
        assert_eq!(a.nf_matrix(&(m * mi)).unwrap(), id);
        assert_eq!(a.nf_matrix(&(mi * m)).unwrap(), id);
    }
}

#[test]
fn composite_letters_expand_to_their_definitions() {
    let a = alg();
    let omega = a.nf_matrix(&a.omega_letters()).unwrap();
    assert_eq!(omega, a.omega);
    // Sigma = g^-1 Omega g
    let sigma = a.nf_matrix(&(&(&a.g_inv * &a.omega_letters()) * &a.g)).unwrap();
    assert_eq!(sigma, a.nf_matrix(&a.sigma_letters()).unwrap());
}
