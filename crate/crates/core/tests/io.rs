use hlm_core::algebra::{build_family, rat, rat_int, Family, GaussRational, ParameterPoint};
use hlm_core::io::{
    export_algebra, export_operator, export_representation, export_weyl_value, import_algebra,
    import_operator, import_representation, import_weyl_value,
};
use hlm_core::matrix_reps::clifford_rep_at;
use hlm_core::spinor::{spinor_op4, MatrixWeylOperator, SpinorOpConfig};
use hlm_core::weyl::{WeylElement, XiRepConfig};
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn algebras_round_trip_byte_for_byte() {
    for fam in [Family::Hlm, Family::Canonical, Family::Lm, Family::Ansatz] {
        let sc = build_family(fam, None).unwrap();
        let text = export_algebra(&sc);
        let back = import_algebra(&text).unwrap();
        assert!(back.same_brackets(&sc));
        assert_eq!(export_algebra(&back), text);
    }
    let numeric = build_family(Family::Hlm, None).unwrap().specialize(
        &ParameterPoint::new(rat_int(1), rat_int(2), rat(-1, 3), rat_int(1))
            .unwrap()
            .bindings(),
    );
    let text = export_algebra(&numeric);
    assert_eq!(export_algebra(&import_algebra(&text).unwrap()), text);
}

#[test]
fn representation_round_trip() {
    let pt = ParameterPoint::new(rat_int(1), rat_int(1), rat_int(-1), rat(3, 4)).unwrap();
    let rep = clifford_rep_at(&pt).unwrap();
    let text = export_representation(&rep);
    let back = import_representation(&text).unwrap();
    assert_eq!(back.images, rep.images);
    assert_eq!(export_representation(&back), text);
}

#[test]
fn operator_round_trip() {
    let c = SpinorOpConfig {
        zeta1: 1,
        zeta2: -1,
        n: rat(2, 3),
        kappa1: GaussRational::one(),
        kappa2: GaussRational::one(),
        kappa3: GaussRational::one(),
    };
    let pt = ParameterPoint::new(rat_int(1), rat_int(1), rat_int(-1), rat_int(0)).unwrap();
    let x = XiRepConfig::new(rat(1, 2), rat_int(3), rat_int(1)).unwrap();
    let op = spinor_op4(&c, &pt, &x).unwrap();
    let text = export_operator(&op);
    let back = import_operator(&text).unwrap();
    assert_eq!(back, op);
    assert_eq!(export_operator(&back), text);
}

#[test]
fn malformed_documents_are_rejected() {
    for bad in [
        "",
        "[]",
        "{\"dim\": 2, \"entries\": [[[], []]]}",
        "{\"dim\": 1, \"entries\": [[[{\"xi\": [0,0,0], \"d\": [0,0,0,0], \"c\": \"1\"}]]]}",
        "{\"dim\": 1, \"entries\": [[[{\"xi\": [0,0,0,0], \"d\": [0,0,0,0], \"c\": \"x\"}]]]}",
    ] {
        assert!(import_operator(bad).is_err(), "{bad}");
    }
    assert!(import_algebra("{\"family\": \"hlm\"}").is_err());
    assert!(import_representation("{\"dim\": 100000, \"images\": {}}").is_err());
}

#[test]
fn empty_operator() {
    let z = MatrixWeylOperator::zero(2);
    assert!(import_operator(&export_operator(&z)).unwrap().is_zero());
}

fn coeff() -> impl Strategy<Value = GaussRational> {
    (-5i64..=5, 1i64..=4, -5i64..=5).prop_map(|(a, d, b)| GaussRational::new(rat(a, d), rat(b, d)))
}

fn weyl() -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(
        (
            prop::array::uniform4(0u16..3),
            prop::array::uniform4(0u16..3),
            coeff(),
        ),
        0..6,
    )
    .prop_map(|ts| {
        ts.into_iter().fold(WeylElement::zero(), |acc, (a, b, c)| {
            acc + &WeylElement::term(a, b, c)
        })
    })
}

proptest! {
    #[test]
    fn weyl_elements_round_trip(w in weyl()) {
        let v = export_weyl_value(&w);
        prop_assert_eq!(import_weyl_value(&v).unwrap(), w);
    }
}
