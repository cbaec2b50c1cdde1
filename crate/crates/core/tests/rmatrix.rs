use num_traits::{One, Zero};
use tgq_core::rmat::{build_p, build_rminus, build_rplus, check_hecke, check_yang_baxter, CMatrix};
use tgq_core::{Error, QRing, Ring, Scalar};

fn q() -> Scalar {
    Scalar::q()
}

fn lam() -> Scalar {
    Scalar::lambda()
}

fn n(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// Hand-written 4 x 4 matrix, row by row.
fn literal(rows: [[Scalar; 4]; 4], scale: Scalar) -> CMatrix<Scalar> {
    CMatrix::from_fn(4, |r, c| rows[r][c].clone() * scale.clone())
}

fn rplus_oracle() -> CMatrix<Scalar> {
    let z = Scalar::zero;
    literal(
        [
            [q(), z(), z(), z()],
            [z(), n(1), lam(), z()],
            [z(), z(), n(1), z()],
            [z(), z(), z(), q()],
        ],
        Scalar::q_pow(-1, 2),
    )
}

fn rminus_oracle() -> CMatrix<Scalar> {
    let z = Scalar::zero;
    let qi = q().inv_unit().unwrap();
    literal(
        [
            [qi.clone(), z(), z(), z()],
            [z(), n(1), z(), z()],
            [z(), -lam(), n(1), z()],
            [z(), z(), z(), qi],
        ],
        Scalar::q_pow(1, 2),
    )
}

#[test]
fn rplus_matches_hand_written_matrix() {
    assert_eq!(build_rplus::<Scalar>(2).unwrap(), rplus_oracle());
}

#[test]
fn rminus_matches_hand_written_matrix() {
    assert_eq!(build_rminus::<Scalar>(2).unwrap(), rminus_oracle());
}

#[test]
fn rminus_is_flipped_inverse_of_rplus() {
    for n in 2..=3 {
        let p = build_p::<Scalar>(n).unwrap();
        let rp = build_rplus::<Scalar>(n).unwrap();
        let rm = build_rminus::<Scalar>(n).unwrap();
        let prod = &(&(&p * &rm) * &p) * &rp;
        assert_eq!(prod, CMatrix::identity(n * n), "n = {n}");
    }
}

#[test]
fn conjugate_transpose_of_rplus_is_rminus() {
    for n in 2..=3 {
        let rp = build_rplus::<Scalar>(n).unwrap();
        assert_eq!(rp.dagger(), build_rminus(n).unwrap(), "n = {n}");
    }
}

#[test]
fn yang_baxter_holds_for_small_ranks() {
    for n in 2..=3 {
        let r = check_yang_baxter(&build_rplus::<Scalar>(n).unwrap()).unwrap();
        assert!(r.holds, "n = {n}: {:?}", r.witness);
        let r = check_yang_baxter(&build_rminus::<Scalar>(n).unwrap()).unwrap();
        assert!(r.holds, "R- at n = {n}");
    }
}

#[test]
fn corrupted_entry_breaks_yang_baxter_with_witness() {
    let mut r = rplus_oracle();
    r.set(1, 2, Scalar::q_pow(-1, 2));
    let rep = check_yang_baxter(&r).unwrap();
    assert!(!rep.holds);
    assert!(rep.witness.is_some());
}

#[test]
fn flip_squares_to_identity() {
    let p = build_p::<Scalar>(3).unwrap();
    assert_eq!(&p * &p, CMatrix::identity(9));
}

#[test]
fn hecke_relation_of_normalized_rplus() {
    // PR has eigenvalues q^(1/2) and -q^(-3/2) once the q^(-1/2) factor is in
    let h = check_hecke(&build_rplus::<Scalar>(2).unwrap()).unwrap();
    let mu1 = Scalar::q_pow(1, 2);
    let mu2 = -Scalar::q_pow(-3, 2);
    assert_eq!(h.alpha, mu1.clone() + mu2.clone());
    assert_eq!(h.beta, -(mu1.clone() * mu2.clone()));
    let (a, b) = h.roots.expect("roots split");
    assert!((a == mu1 && b == mu2) || (a == mu2 && b == mu1));
}

#[test]
fn rank_three_uses_cube_root_normalization() {
    let r = build_rplus::<Scalar>(3).unwrap();
    assert_eq!(*r.get(0, 0), Scalar::q_pow(2, 3));
    assert_eq!(*r.get(1, 1), Scalar::q_pow(-1, 3));
    assert_eq!(*r.get(1, 3), lam() * Scalar::q_pow(-1, 3));
}

#[test]
fn rank_below_two_is_rejected() {
    assert!(matches!(build_rplus::<Scalar>(1), Err(Error::BadDimension(_))));
    assert!(matches!(
        check_yang_baxter(&CMatrix::<Scalar>::identity(3)),
        Err(Error::BadDimension(_))
    ));
}

#[test]
fn singular_matrix_has_no_inverse() {
    let m = CMatrix::from_fn(2, |_, _| Scalar::one());
    assert_eq!(m.inverse(), Err(Error::SingularMatrix));
}
