//! Randomized property tests: field axioms for the scalar layer, basis
//! change round trips, classification invariance, and the structural
//! consequences the law checkers promise each other.

use novikov::algebra::SuperAlgebra;
use novikov::laws::{
    check_gd, classify_type, commutator, is_lie_superalgebra, novikov_algebra_holds,
    novikov_superalgebra_holds, super_commutator, AlgebraType,
};
use novikov::matrix::Matrix;
use novikov::scalar::{FieldDescriptor, Scalar};
use num::BigInt;
use proptest::prelude::*;

fn rational(num: i64, den: i64) -> Scalar {
    FieldDescriptor::Rational
        .fraction(&BigInt::from(num), &BigInt::from(den))
        .unwrap()
}

fn residue(p: u64, v: u8) -> Scalar {
    FieldDescriptor::gf(p).unwrap().integer(v as i64)
}

fn arb_rational() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rational(n, d))
}

fn scalar_triple(p: Option<u64>) -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    match p {
        None => (arb_rational(), arb_rational(), arb_rational()).boxed(),
        Some(p) => (0u8..255, 0u8..255, 0u8..255)
            .prop_map(move |(a, b, c)| (residue(p, a), residue(p, b), residue(p, c)))
            .boxed(),
    }
}

fn field_axioms((a, b, c): (Scalar, Scalar, Scalar)) {
    let add = |x: &Scalar, y: &Scalar| x.add(y).unwrap();
    let mul = |x: &Scalar, y: &Scalar| x.mul(y).unwrap();
    assert_eq!(add(&a, &b), add(&b, &a));
    assert_eq!(mul(&a, &b), mul(&b, &a));
    assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
    assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
    assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
    let zero = a.field().zero();
    let one = a.field().one();
    assert_eq!(add(&a, &zero), a);
    assert_eq!(mul(&a, &one), a);
    assert!(a.sub(&a).unwrap().is_zero());
    if !a.is_zero() {
        assert_eq!(mul(&a, &a.inv().unwrap()), one);
    }
}

/// A (1, 2) table over GF(p) from 13 digits (the free slots, odd-odd
/// first, same order the search uses).
fn table_1_2(p: u64, digits: &[u8]) -> SuperAlgebra {
    let field = FieldDescriptor::gf(p).unwrap();
    let slots = novikov::search::free_slots(1, 2);
    assert_eq!(digits.len(), slots.len());
    let entries: Vec<(usize, usize, usize, Scalar)> = slots
        .iter()
        .zip(digits)
        .filter(|(_, d)| **d != 0)
        .map(|(&(i, j, k), d)| (i, j, k, field.integer((*d as u64 % p) as i64)))
        .collect();
    SuperAlgebra::from_entries(1, 2, field, &entries).unwrap()
}

fn arb_digits(len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..6, len)
}

/// A graded invertible 3x3 basis-change matrix for signature (1, 2) over
/// GF(p): an even scalar block and an odd 2x2 block.
fn arb_transform(p: u64) -> impl Strategy<Value = Matrix> {
    let field = FieldDescriptor::gf(p).unwrap();
    (1u8..6, proptest::collection::vec(0u8..6, 4))
        .prop_map(move |(even, odd)| {
            let e = |v: u8| field.integer((v as u64 % p) as i64);
            Matrix::from_rows(
                field,
                &[
                    vec![e(even), field.zero(), field.zero()],
                    vec![field.zero(), e(odd[0]), e(odd[1])],
                    vec![field.zero(), e(odd[2]), e(odd[3])],
                ],
            )
        })
        .prop_filter("must be invertible", |m| m.inverse().is_ok())
}

proptest! {
    #[test]
    fn rational_field_axioms(t in scalar_triple(None)) {
        field_axioms(t);
    }

    #[test]
    fn gf7_field_axioms(t in scalar_triple(Some(7))) {
        field_axioms(t);
    }

    #[test]
    fn gf2_field_axioms(t in scalar_triple(Some(2))) {
        field_axioms(t);
    }

    #[test]
    fn transform_round_trip(digits in arb_digits(13), m in arb_transform(5)) {
        let alg = table_1_2(5, &digits);
        let inv = m.inverse().unwrap();
        let there = alg.transform(&m).unwrap();
        let back = there.transform(&inv).unwrap();
        prop_assert_eq!(back, alg);
    }

    #[test]
    fn law_verdicts_are_basis_independent(digits in arb_digits(13), m in arb_transform(5)) {
        let alg = table_1_2(5, &digits);
        let moved = alg.transform(&m).unwrap();
        prop_assert_eq!(
            novikov_superalgebra_holds(&alg),
            novikov_superalgebra_holds(&moved)
        );
        if let (Ok(t1), Ok(t2)) = (classify_type(&alg), classify_type(&moved)) {
            prop_assert_eq!(t1, t2);
        }
    }

    #[test]
    fn char2_graded_and_ungraded_laws_coincide(digits in arb_digits(13)) {
        // all Koszul signs vanish mod 2, so the two law families agree on
        // every graded table and every GF(2) hit is type N
        let alg = table_1_2(2, &digits);
        prop_assert_eq!(
            novikov_superalgebra_holds(&alg),
            novikov_algebra_holds(&alg)
        );
        if let Ok(t) = classify_type(&alg) {
            prop_assert_eq!(t, AlgebraType::N);
        }
    }

    #[test]
    fn novikov_hits_support_their_brackets(digits in arb_digits(13)) {
        let alg = table_1_2(3, &digits);
        if novikov_superalgebra_holds(&alg) {
            let b = super_commutator(&alg);
            prop_assert!(is_lie_superalgebra(&b).pass);
            prop_assert!(check_gd(&alg, &b).unwrap().pass);
        }
    }

    #[test]
    fn zero_odd_square_makes_brackets_agree(digits in arb_digits(13)) {
        // blank out the odd-odd slots (the first four in search order)
        let mut digits = digits;
        for d in digits.iter_mut().take(4) {
            *d = 0;
        }
        let alg = table_1_2(3, &digits);
        prop_assert!(alg.odd_square_is_zero());
        prop_assert_eq!(super_commutator(&alg), commutator(&alg));
        if let Ok(t) = classify_type(&alg) {
            prop_assert_eq!(t, AlgebraType::N);
        }
    }

    #[test]
    fn one_dim_module_checkers_agree_over_gf5(
        l in proptest::collection::vec(0u8..5, 4),
        r in proptest::collection::vec(0u8..5, 4),
        epsilon in 0u8..2,
    ) {
        use novikov::modules::{
            check_module_axioms, one_dim_equations_hold, NovikovAlgebra1D, NovikovModule,
        };
        let field = FieldDescriptor::gf(5).unwrap();
        let to_mat = |v: &[u8]| {
            Matrix::from_rows(
                field,
                &[
                    vec![field.integer(v[0] as i64), field.integer(v[1] as i64)],
                    vec![field.integer(v[2] as i64), field.integer(v[3] as i64)],
                ],
            )
        };
        let lm = to_mat(&l);
        let rm = to_mat(&r);
        let base = NovikovAlgebra1D::new(epsilon).unwrap().algebra(field);
        let module = NovikovModule::new(base, 2, vec![lm.clone()], vec![rm.clone()]).unwrap();
        prop_assert_eq!(
            one_dim_equations_hold(epsilon, &lm, &rm),
            check_module_axioms(&module).unwrap().pass
        );
    }
}
