use hlm_core::algebra::{rat, rat_int, GaussRational, ParameterPoint, Rational};
use hlm_core::linalg::CMatrix;
use hlm_core::spinor::{
    build_dirac, intertwiner_search, parity_transform, spinor_op4, spinor_op8, MatrixWeylOperator,
    SpinorOpConfig,
};
use hlm_core::weyl::XiRepConfig;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cfg(z1: i8, z2: i8, n: Rational, k: [GaussRational; 3]) -> SpinorOpConfig {
    let [kappa1, kappa2, kappa3] = k;
    SpinorOpConfig {
        zeta1: z1,
        zeta2: z2,
        n,
        kappa1,
        kappa2,
        kappa3,
    }
}

fn unit() -> [GaussRational; 3] {
    [
        GaussRational::one(),
        GaussRational::one(),
        GaussRational::one(),
    ]
}

/// `lambda = 1`, `mu = -1`: every radical squares to one.
fn base_point() -> ParameterPoint {
    ParameterPoint::new(rat_int(1), rat_int(1), rat_int(-1), rat_int(-1)).unwrap()
}

fn xi() -> XiRepConfig {
    XiRepConfig::new(rat_int(1), rat_int(1), rat_int(1)).unwrap()
}

fn assert_sound(d: &MatrixWeylOperator, s: &CMatrix) {
    assert!(!s.det().is_zero());
    assert_eq!(parity_transform(d).left_mul(s), d.right_mul(s));
}

#[test]
fn dirac_matrices() {
    assert!(build_dirac().relations_hold());
}

#[test]
fn eight_components_admit_a_parity_intertwiner() {
    let d = spinor_op8(&cfg(1, 1, rat_int(1), unit()), &base_point(), &xi()).unwrap();
    let r = intertwiner_search(&d, &parity_transform(&d)).unwrap();
    assert!(r.pass());
    assert_sound(&d, r.found.as_ref().unwrap());
}

#[test]
fn four_components_admit_none() {
    let d = spinor_op4(&cfg(1, 1, rat_int(1), unit()), &base_point(), &xi()).unwrap();
    let r = intertwiner_search(&d, &parity_transform(&d)).unwrap();
    assert!(r.found.is_none());
    assert!(r.exact);
}

#[test]
fn other_branches_and_points() {
    let two = GaussRational::real(rat_int(2));
    let i = GaussRational::i();
    let cases = [
        (
            ParameterPoint::new(rat_int(1), rat_int(4), rat_int(-1), rat_int(-1)).unwrap(),
            [two.clone(), GaussRational::one(), two],
        ),
        (
            ParameterPoint::new(rat_int(1), rat_int(-1), rat_int(1), rat_int(-1)).unwrap(),
            [GaussRational::one(), i.clone(), i],
        ),
    ];
    for (pt, k) in cases {
        for (z1, z2) in [(1, 1), (-1, 1), (1, -1)] {
            let c = cfg(z1, z2, rat(1, 2), k.clone());
            let d = spinor_op8(&c, &pt, &xi()).unwrap();
            let r = intertwiner_search(&d, &parity_transform(&d)).unwrap();
            if let Some(s) = &r.found {
                assert_sound(&d, s);
            } else {
                assert!(r.exact);
            }
        }
    }
}

#[test]
fn radicals_must_match_the_point() {
    let wrong = cfg(
        1,
        1,
        rat_int(1),
        [
            GaussRational::i(),
            GaussRational::one(),
            GaussRational::one(),
        ],
    );
    assert!(spinor_op8(&wrong, &base_point(), &xi()).is_err());
    let bad_sign = cfg(2, 1, rat_int(1), unit());
    assert!(spinor_op4(&bad_sign, &base_point(), &xi()).is_err());
}

fn small() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn parity_is_an_involution(n in small(), a in small(), z1 in prop::bool::ANY, z2 in prop::bool::ANY) {
        let sign = |b: bool| if b { 1 } else { -1 };
        let c = cfg(sign(z1), sign(z2), n, unit());
        let x = XiRepConfig::new(a, rat_int(2), rat_int(1)).unwrap();
        let d = spinor_op8(&c, &base_point(), &x).unwrap();
        prop_assert_eq!(parity_transform(&parity_transform(&d)), d);
    }

    #[test]
    fn identical_operators_intertwine_trivially(n in small()) {
        let d = spinor_op4(&cfg(1, 1, n, unit()), &base_point(), &xi()).unwrap();
        let r = intertwiner_search(&d, &d).unwrap();
        prop_assert!(r.pass());
        prop_assert_eq!(r.found.unwrap(), CMatrix::identity(4));
    }
}
