use std::sync::OnceLock;

use num_traits::{One, Zero};
use proptest::prelude::*;
use tgq_core::matword::{free_reduce, parse_word, DaggerTable, MatSymbol, MatWord};
use tgq_core::star::{star_apply, StarForm, StarMap};
use tgq_core::{Algebra, Letter, NCPoly, Poly, QRing, Ring, Scalar, Word};

fn alg() -> &'static Algebra {
    static A: OnceLock<Algebra> = OnceLock::new();
    A.get_or_init(|| Algebra::sl2().unwrap())
}

fn atom() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-4i64..=4).prop_map(Scalar::from_int),
        (-4i64..=4, prop_oneof![Just(1i64), Just(2)]).prop_map(|(n, d)| Scalar::q_pow(n, d)),
        Just(Scalar::imaginary_unit().unwrap()),
        Just(Scalar::lambda()),
        Just(Scalar::lambda().inv_unit().unwrap()),
    ]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((atom(), atom()), 1..4)
        .prop_map(|v| v.into_iter().fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
}

fn letters(alphabet: &'static [Letter]) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop::sample::select(alphabet), 0..4)
}

fn poly(alphabet: &'static [Letter]) -> impl Strategy<Value = Poly> {
    prop::collection::vec((letters(alphabet), scalar()), 0..4).prop_map(|terms| {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(Word(w), c);
        }
        p
    })
}

const ALL: &[Letter] = &[
    Letter::Kinv,
    Letter::K,
    Letter::Xp,
    Letter::Xm,
    Letter::G(0, 0),
    Letter::G(0, 1),
    Letter::G(1, 0),
    Letter::G(1, 1),
];
const UQ: &[Letter] = &[Letter::Kinv, Letter::K, Letter::Xp, Letter::Xm];
const GS: &[Letter] = &[Letter::G(0, 0), Letter::G(0, 1), Letter::G(1, 0), Letter::G(1, 1)];

const SYMBOLS: &[&str] = &[
    "g", "g^-1", "h", "Op1", "Om2", "Sp", "Sm^-1", "Omega", "Sigma1", "ML", "MR^-1", "R+", "R-^-1", "P",
];

fn mat_word() -> impl Strategy<Value = Vec<MatSymbol>> {
    prop::collection::vec(prop::sample::select(SYMBOLS), 0..6)
        .prop_map(|v| v.iter().flat_map(|s| parse_word(s).unwrap()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Scalar::zero());
        prop_assert_eq!(a.clone() * Scalar::one(), a);
    }

    #[test]
    fn conjugation_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        prop_assert_eq!((a.clone() + b.clone()).conj(), a.conj() + b.conj());
    }

    #[test]
    fn units_invert(a in atom(), b in atom()) {
        let u = a * b;
        if !u.is_zero() {
            prop_assert_eq!(u.clone() * u.inv_unit().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn polynomial_product_is_associative(a in poly(ALL), b in poly(ALL), c in poly(ALL)) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn normal_form_is_idempotent(p in poly(ALL)) {
        let n = alg().nf(&p).unwrap();
        prop_assert_eq!(alg().nf(&n).unwrap(), n);
    }

    #[test]
    fn normal_form_respects_products(a in poly(ALL), b in poly(ALL)) {
        let lhs = alg().nf(&(a.clone() * b.clone())).unwrap();
        let rhs = alg().nf(&(alg().nf(&a).unwrap() * alg().nf(&b).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_linear(a in poly(ALL), b in poly(ALL), c in scalar()) {
        let lhs = alg().nf(&(a.scale(&c) + b.clone())).unwrap();
        let rhs = alg().nf(&a).unwrap().scale(&c) + alg().nf(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compact_star_is_an_involutive_antihomomorphism(a in poly(UQ), b in poly(UQ)) {
        let m = StarMap::compact();
        let st = |p: &Poly| star_apply(p, &m, alg()).unwrap();
        prop_assert_eq!(st(&st(&a)), a.clone());
        prop_assert_eq!(st(&(a.clone() * b.clone())), st(&b) * st(&a));
    }

    #[test]
    fn hyperboloid_star_is_an_involutive_antihomomorphism(a in poly(GS), b in poly(GS)) {
        let m = StarMap::hyperboloid();
        let st = |p: &Poly| star_apply(p, &m, alg()).unwrap();
        prop_assert_eq!(st(&st(&a)), a.clone());
        prop_assert_eq!(st(&(a.clone() * b.clone())), st(&b) * st(&a));
    }

    #[test]
    fn matrix_dagger_is_an_involutive_antihomomorphism(a in mat_word(), b in mat_word()) {
        for form in [StarForm::Compact, StarForm::Hyperboloid] {
            let t = DaggerTable::new(form);
            prop_assert!(t.is_involutive_on(&a));
            let d = |w: &[MatSymbol]| t.dagger_word::<Scalar>(&MatWord::new(w.to_vec())).syms;
            let mut ab = a.clone();
            ab.extend(b.iter().copied());
            let mut ba = d(&b);
            ba.extend(d(&a));
            prop_assert_eq!(d(&ab), free_reduce(&ba));
        }
    }

    #[test]
    fn free_reduction_is_idempotent(a in mat_word()) {
        let r = free_reduce(&a);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(r.len() <= a.len());
    }
}

#[test]
fn unit_polynomial_normal_form() {
    assert_eq!(alg().nf(&NCPoly::one()).unwrap(), Poly::one());
}
