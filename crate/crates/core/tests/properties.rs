use num_rational::BigRational;
use proptest::prelude::*;

use qharmonic::compositions::{dual, theorem1_form, theorem1_params, Composition};
use qharmonic::qpoly::{QPoly, QRatFun};
use qharmonic::verify::check_prodinger_equivalence;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, r)| BigRational::new(p.into(), r.into()))
}

fn poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(QPoly::from_coeffs)
}

fn ratfun() -> impl Strategy<Value = QRatFun> {
    (poly(4), poly(3))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| QRatFun::new(n, d).unwrap())
}

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=4, 1..=5).prop_map(Composition::new)
}

fn point() -> impl Strategy<Value = BigRational> {
    (1i64..=30, 31i64..=60).prop_map(|(p, r)| BigRational::new(p.into(), r.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfun(), b in ratfun(), x in point()) {
        if let (Ok(va), Ok(vb)) = (a.eval_at(&x), b.eval_at(&x)) {
            prop_assert_eq!((&a + &b).eval_at(&x).unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).eval_at(&x).unwrap(), &va * &vb);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in ratfun(), extra in poly(2)) {
        let again = QRatFun::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert!(a.den().leading_coeff().map(|c| c == &BigRational::from_integer(1.into())).unwrap_or(false));
        if !extra.is_zero() {
            let scaled = QRatFun::new(a.num() * &extra, a.den() * &extra).unwrap();
            prop_assert_eq!(scaled, a);
        }
    }

    #[test]
    fn reciprocal_substitution_is_an_involution(a in ratfun()) {
        prop_assert_eq!(a.substitute_reciprocal().substitute_reciprocal(), a);
    }

    #[test]
    fn dual_is_an_involution_preserving_weight(s in composition()) {
        let d = dual(&s).unwrap();
        prop_assert_eq!(d.weight(), s.weight());
        prop_assert_eq!(dual(&d).unwrap(), s);
    }

    #[test]
    fn parameter_form_round_trips(s in composition()) {
        let (a, b) = theorem1_params(&s).unwrap();
        let (left, right) = theorem1_form(&a, &b).unwrap();
        prop_assert_eq!(&left, &s);
        prop_assert_eq!(right, dual(&s).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inverse_pairs_are_equivalent(alpha in prop::collection::vec(ratfun(), 2..=5)) {
        let n = alpha.len() - 1;
        prop_assert!(check_prodinger_equivalence(&alpha, n).unwrap().holds());
    }
}
