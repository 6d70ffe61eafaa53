use hlm_core::algebra::{build_family, rat, rat_int, Family, ParameterPoint, Rational};
use hlm_core::classify::embedding::check_embedding;
use hlm_core::classify::reference::{semidirect_inertia, so_inertia};
use hlm_core::classify::{
    classify_point, killing_form, semisimple_value, solve_embedding, verify_classification,
    AlgebraType, ExtendedSquare, SquaresPoint,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn sq(l2: Rational, m2: Rational, h2: Rational, f: Rational) -> SquaresPoint {
    SquaresPoint::new(
        ExtendedSquare::Finite(l2),
        ExtendedSquare::Finite(m2),
        ExtendedSquare::Finite(h2),
        f,
    )
}

fn det_zero(p: &SquaresPoint) -> bool {
    let (pt, _) = p.parameter_point().unwrap();
    let sc = build_family(Family::Hlm, None)
        .unwrap()
        .substitute(&pt, None)
        .unwrap();
    killing_form(&sc).det().is_zero()
}

#[test]
fn reference_inertias() {
    assert_eq!(so_inertia(2, 4), (7, 8, 0));
    assert_eq!(so_inertia(1, 5), (10, 5, 0));
    assert_eq!(so_inertia(3, 3), (6, 9, 0));
    assert_eq!(semidirect_inertia(1, 4).2, 5);
    assert_eq!(semidirect_inertia(2, 3).2, 5);
}

#[test]
fn determinant_vanishes_exactly_with_semisimple_value() {
    let vals = [
        rat_int(1),
        rat_int(-1),
        rat_int(2),
        rat(-1, 2),
        rat_int(4),
        rat(-9, 4),
    ];
    let hs = [rat_int(1), rat_int(4), rat(1, 4), rat_int(2), rat(9, 8)];
    for l in &vals {
        for m in &vals {
            for h in &hs {
                let p = sq(l.clone(), m.clone(), h.clone(), rat(2, 3));
                let sv = semisimple_value(&p.l2, &p.m2, &p.h2, &p.f).unwrap();
                assert_eq!(sv.is_zero(), det_zero(&p), "{p}");
            }
        }
    }
}

#[test]
fn surface_points_are_semidirect() {
    for (l, m) in [
        (rat_int(2), rat_int(2)),
        (rat(1, 2), rat_int(8)),
        (rat(2, 3), rat(3, 2)),
    ] {
        let up = sq(l.clone(), m.clone(), &l * &m, Rational::one());
        assert_eq!(
            classify_point(&up).unwrap(),
            AlgebraType::DegenO14SemiDirect
        );
        let down = sq(-l.clone(), -m.clone(), &l * &m, Rational::one());
        assert_eq!(
            classify_point(&down).unwrap(),
            AlgebraType::DegenO23SemiDirect
        );
        for p in [up, down] {
            let r = verify_classification(&p).unwrap();
            assert!(r.killing_det_zero);
            assert!(r.embedding.is_none());
        }
    }
}

#[test]
fn inputs_outside_the_domain() {
    let zero = sq(Rational::zero(), rat_int(1), rat_int(1), rat_int(1));
    assert!(classify_point(&zero).is_err());
    let neg_h = sq(rat_int(1), rat_int(1), rat_int(-1), rat_int(1));
    assert!(classify_point(&neg_h).is_err());
    let no_f = sq(rat_int(1), rat_int(1), rat_int(1), Rational::zero());
    assert!(classify_point(&no_f).is_err());
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4, any::<bool>()).prop_map(|(n, d, s)| rat(if s { n } else { -n }, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// The table's verdict always agrees with the exact Killing inertia,
    /// including at points where `H` is irrational and the rescaled
    /// representative is used.
    #[test]
    fn table_agrees_with_killing_inertia(l in nonzero(), m in nonzero(), h in positive(), f in nonzero()) {
        let p = sq(l, m, h, f);
        let r = verify_classification(&p);
        prop_assert!(r.is_ok(), "{}: {:?}", p, r.err());
    }

    #[test]
    fn embeddings_are_certified(l in nonzero(), m in nonzero(), e in nonzero(), f in nonzero()) {
        let pt = ParameterPoint::new(f, l, m, e).unwrap();
        prop_assume!(!(&pt.lambda * &pt.mu - &pt.eta * &pt.eta).is_zero());
        let emb = solve_embedding(&pt, None).unwrap();
        prop_assert!(check_embedding(&pt, &emb).unwrap().is_empty());
    }
}
