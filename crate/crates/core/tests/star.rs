use num_traits::Zero;
use tgq_core::heisenberg::OpMatrix;
use tgq_core::star::{
    check_involutivity, is_letter_map, star_apply, star_det_residual, verify_star_closure, ClosureStatus, StarForm,
    StarMap,
};
use tgq_core::verify::flipped_compact_map;
use tgq_core::{Algebra, Error, Letter, NCPoly, Poly, QRing, Scalar};

fn l(x: Letter) -> Poly {
    NCPoly::letter(x)
}

fn alg() -> Algebra {
    Algebra::sl2().unwrap()
}

/// Entrywise conjugate transpose under `map`, normalized.
fn dagger(a: &Algebra, m: &OpMatrix<Scalar>, map: &StarMap<Scalar>) -> OpMatrix<Scalar> {
    let d = OpMatrix::from_fn(2, |r, c| star_apply(m.get(c, r), map, a).unwrap());
    a.nf_matrix(&d).unwrap()
}

#[test]
fn compact_star_swaps_omega_plus_and_minus() {
    let a = alg();
    let map = StarMap::compact();
    assert_eq!(dagger(&a, &a.om_plus, &map), a.om_minus);
    assert_eq!(dagger(&a, &a.om_minus, &map), a.om_plus);
}

#[test]
fn compact_star_with_k_fixed_is_inconsistent_with_omega() {
    let a = alg();
    let map = StarMap::compact()
        .with_image(Letter::K, l(Letter::K))
        .with_image(Letter::Kinv, l(Letter::Kinv));
    assert_ne!(dagger(&a, &a.om_plus, &map), a.om_minus);
}

#[test]
fn hyperboloid_star_transposes_g_and_exchanges_composites() {
    let a = alg();
    let map = StarMap::hyperboloid();
    assert_eq!(star_apply(&l(Letter::G(0, 1)), &map, &a).unwrap(), l(Letter::G(1, 0)));
    assert_eq!(star_apply(&l(Letter::Omega(0, 1)), &map, &a).unwrap(), l(Letter::Sigma(1, 0)));
    assert_eq!(dagger(&a, &a.g, &map), a.g);
}

#[test]
fn star_conjugates_coefficients_and_reverses_words() {
    let a = alg();
    let map = StarMap::compact();
    let i = Scalar::imaginary_unit().unwrap();
    let p = (l(Letter::K) * l(Letter::Xp)).scale(&(i.clone() * Scalar::q()));
    let expected = (l(Letter::Xm) * l(Letter::Kinv)).scale(&(-i * Scalar::q_pow(-1, 1)));
    assert_eq!(star_apply(&p, &map, &a).unwrap(), expected);
}

#[test]
fn compact_scalar_closure_counts() {
    let a = alg();
    let r = verify_star_closure(&StarMap::compact(), &a).unwrap();
    assert!(r.passed());
    assert_eq!(
        (r.count(ClosureStatus::Pass), r.count(ClosureStatus::Fail), r.count(ClosureStatus::Deferred)),
        (33, 0, 71)
    );
}

#[test]
fn hyperboloid_scalar_closure_counts() {
    let a = alg();
    let r = verify_star_closure(&StarMap::hyperboloid(), &a).unwrap();
    assert!(r.passed(), "{:?}", r.entries.iter().find(|e| e.status == ClosureStatus::Fail));
    assert_eq!(
        (r.count(ClosureStatus::Pass), r.count(ClosureStatus::Fail), r.count(ClosureStatus::Deferred)),
        (54, 0, 50)
    );
}

#[test]
fn flipped_compact_star_fails_closure() {
    let a = alg();
    let r = verify_star_closure(&flipped_compact_map(), &a).unwrap();
    assert!(!r.passed());
    let fail = r.entries.iter().find(|e| e.status == ClosureStatus::Fail).unwrap();
    assert!(fail.detail.is_some());
}

#[test]
fn both_stars_are_involutive_on_random_polynomials() {
    let a = alg();
    for map in [StarMap::compact(), StarMap::hyperboloid()] {
        let r = check_involutivity(&map, &a, 50, 5).unwrap();
        assert!(r.failures.is_empty(), "{}: {:?}", map.form, r.failures);
    }
}

#[test]
fn hyperboloid_star_fixes_the_determinant() {
    let a = alg();
    assert!(star_det_residual(&StarMap::hyperboloid(), &a).unwrap().is_zero());
}

#[test]
fn missing_images_carry_a_hint() {
    let a = alg();
    match star_apply(&l(Letter::G(0, 0)), &StarMap::compact(), &a) {
        Err(Error::NoImage { letter, hint }) => {
            assert_eq!(letter, "g[1,1]");
            assert!(hint.contains("--tier matrix"));
        }
        other => panic!("{other:?}"),
    }
    match star_apply(&l(Letter::K), &StarMap::hyperboloid(), &a) {
        Err(Error::NoImage { hint, .. }) => assert!(hint.contains("Omega")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn built_in_maps_send_letters_to_letters() {
    assert!(is_letter_map(&StarMap::<Scalar>::compact()));
    assert!(is_letter_map(&StarMap::<Scalar>::hyperboloid()));
    let scaled = StarMap::<Scalar>::compact().with_image(Letter::Xp, l(Letter::Xm).scale(&Scalar::q()));
    assert!(!is_letter_map(&scaled));
}

#[test]
fn star_form_parses_from_text() {
    assert_eq!("compact".parse::<StarForm>().unwrap(), StarForm::Compact);
    assert!(matches!("elliptic".parse::<StarForm>(), Err(Error::Config(_))));
}
