use mathieu_core::json::{element_from_json, element_to_json};
use mathieu_core::mathieu::{decide_mathieu, radical_enumerate, radical_member, verify_witness};
use mathieu_core::{Algebra, FieldSpec, Scalar, ScanConfig, Subspace, ThetaVariant};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(7), Just(101)].prop_map(|p| FieldSpec::new(p).unwrap())
}

fn scalar(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..7).prop_map(move |(n, d)| {
        if f.is_finite() {
            f.from_i64(n)
        } else {
            f.from_ratio(n.into(), d.into()).unwrap()
        }
    })
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    field().prop_flat_map(|f| (scalar(f), scalar(f), scalar(f)))
}

fn theta() -> impl Strategy<Value = ThetaVariant> {
    prop_oneof![
        Just(ThetaVariant::Left),
        Just(ThetaVariant::Right),
        Just(ThetaVariant::PreTwoSided),
        Just(ThetaVariant::TwoSided)
    ]
}

fn m2(p: u64) -> Algebra {
    Algebra::matrix(2, FieldSpec::new(p).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        let f = a.field();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, f.zero());
        prop_assert_eq!(&a * &f.one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
        } else {
            prop_assert!(a.inv().is_err());
        }
        prop_assert_eq!(f.parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn matrix_products_associate(c in proptest::collection::vec(-4i64..5, 12)) {
        let m = Algebra::matrix(2, FieldSpec::RATIONALS).unwrap();
        let (x, y, z) = (m.from_i64s(&c[0..4]).unwrap(), m.from_i64s(&c[4..8]).unwrap(), m.from_i64s(&c[8..12]).unwrap());
        prop_assert_eq!(m.mul(&m.mul(&x, &y), &z), m.mul(&x, &m.mul(&y, &z)));
        prop_assert_eq!(m.mul(&m.one(), &x), x.clone());
    }

    #[test]
    fn minimal_polynomial_annihilates(c in proptest::collection::vec(-3i64..4, 9)) {
        let m = Algebra::matrix(3, FieldSpec::RATIONALS).unwrap();
        let a = m.from_i64s(&c).unwrap();
        let mp = m.minimal_polynomial(&a);
        prop_assert!(m.eval_poly(&mp.minpoly, &a).is_zero());
        prop_assert!(mp.degree() <= 3);
        if !mp.is_nilpotent() && !mp.is_invertible() {
            let p = m.build_p_of_a(&a).unwrap();
            prop_assert_eq!(m.mul(&p, &p), p.clone());
            prop_assert!(!p.is_zero() && p != m.one());
        }
    }

    #[test]
    fn refutations_carry_valid_witnesses(
        p in prop_oneof![Just(2u64), Just(3)],
        rows in proptest::collection::vec(proptest::collection::vec(0i64..3, 4), 1..4),
        t in theta(),
    ) {
        let alg = m2(p);
        let elems: Vec<_> = rows.iter().map(|r| alg.from_i64s(r).unwrap()).collect();
        let v = Subspace::span(&alg, &elems).unwrap();
        let verdict = decide_mathieu(&alg, &v, t, &ScanConfig::default()).unwrap();
        match &verdict.witness {
            Some(w) => {
                prop_assert!(!verdict.is_mathieu);
                prop_assert!(verify_witness(&alg, &v, t, w).unwrap());
            }
            None => prop_assert!(verdict.is_mathieu),
        }
    }

    #[test]
    fn opposite_algebra_swaps_sides(
        rows in proptest::collection::vec(proptest::collection::vec(0i64..3, 4), 1..4),
        t in theta(),
    ) {
        let alg = m2(3);
        let opp = Algebra::opposite(&alg);
        let cfg = ScanConfig::default();
        let v = Subspace::span(&alg, &rows.iter().map(|r| alg.from_i64s(r).unwrap()).collect::<Vec<_>>()).unwrap();
        let w = Subspace::span(&opp, &rows.iter().map(|r| opp.from_i64s(r).unwrap()).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(
            decide_mathieu(&alg, &v, t, &cfg).unwrap().is_mathieu,
            decide_mathieu(&opp, &w, t.mirrored(), &cfg).unwrap().is_mathieu
        );
    }

    #[test]
    fn radical_enumeration_matches_membership(
        rows in proptest::collection::vec(proptest::collection::vec(0i64..2, 4), 0..3),
    ) {
        let alg = m2(2);
        let v = Subspace::span(&alg, &rows.iter().map(|r| alg.from_i64s(r).unwrap()).collect::<Vec<_>>()).unwrap();
        let rad = radical_enumerate(&alg, &v, &ScanConfig::default()).unwrap();
        let mut count = 0;
        for bits in 0..16i64 {
            let a = alg.from_i64s(&[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, bits >> 3]).unwrap();
            let inside = radical_member(&alg, &v, &a).unwrap();
            prop_assert_eq!(inside, rad.contains(&a));
            count += usize::from(inside);
        }
        prop_assert_eq!(count, rad.len());
    }

    #[test]
    fn element_json_round_trip(c in proptest::collection::vec((-9i64..10, 1i64..5), 4)) {
        let q = FieldSpec::RATIONALS;
        let m = Algebra::matrix(2, q).unwrap();
        let coords = c.iter().map(|&(n, d)| q.from_ratio(n.into(), d.into()).unwrap()).collect();
        let a = m.element(coords).unwrap();
        prop_assert_eq!(element_from_json(&m, &element_to_json(&a)).unwrap(), a);
    }
}
