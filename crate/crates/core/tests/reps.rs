use hlm_core::algebra::operator::non_commuting;
use hlm_core::algebra::{
    build_family, rat, rat_int, Family, GaussRational, ParameterPoint, Rational,
};
use hlm_core::classify::reference::signature_metric;
use hlm_core::classify::{ExtendedSquare, SquaresPoint};
use hlm_core::linalg::CMatrix;
use hlm_core::matrix_reps::{
    build_gammas, casimir_matrix, clifford_rep_at, reference_vector_rep, six_dim_rep,
    structure_constants_from_rep, verify_images, verify_rep, CasimirKind, Representation,
};
use num_traits::Zero;

fn point(l2: Rational, m2: Rational, h2: Rational, f: Rational) -> ParameterPoint {
    SquaresPoint::new(
        ExtendedSquare::Finite(l2),
        ExtendedSquare::Finite(m2),
        ExtendedSquare::Finite(h2),
        f,
    )
    .parameter_point()
    .unwrap()
    .0
}

fn hlm_at(pt: &ParameterPoint) -> hlm_core::algebra::structure::NumericConstants {
    build_family(Family::Hlm, None)
        .unwrap()
        .substitute(pt, None)
        .unwrap()
}

fn rep_at(pt: &ParameterPoint) -> Representation {
    clifford_rep_at(pt).unwrap()
}

#[test]
fn gammas_square_to_the_six_metric() {
    let gs = build_gammas();
    assert!(gs.clifford_relations_hold());
    let want: Vec<Rational> = [1, -1, -1, -1, -1, 1].into_iter().map(rat_int).collect();
    assert_eq!(gs.metric6, want);
}

#[test]
fn clifford_representation_is_faithful_to_the_table() {
    let pt = point(rat_int(1), rat_int(-1), rat(16, 9), rat_int(1));
    let rep = rep_at(&pt);
    assert_eq!(rep.dim, 8);
    let sc = hlm_at(&pt);
    let r = verify_rep(&rep, &sc);
    assert_eq!(r.pairs_checked, 105);
    assert!(r.pass(), "{:?}", r.failures);
    assert!(structure_constants_from_rep(&rep)
        .unwrap()
        .same_brackets(&sc));
}

#[test]
fn corrupted_image_is_detected() {
    let pt = point(rat_int(1), rat_int(-1), rat(16, 9), rat_int(1));
    let mut rep = rep_at(&pt);
    let mut m = rep.images[7].clone();
    let bumped = m.get(0, 1).clone() + GaussRational::from_int(1);
    m.set(0, 1, bumped);
    rep.images[7] = m;
    assert!(!verify_rep(&rep, &hlm_at(&pt)).pass());
}

#[test]
fn points_without_a_normalized_embedding_are_refused() {
    for h2 in [rat(4, 3), rat(3, 4)] {
        assert!(clifford_rep_at(&point(rat_int(1), rat_int(-1), h2, rat_int(1))).is_err());
    }
}

/// `sum_{a != b} J_ab J^ab` with `J_ab = (i f / 2) Gamma_a Gamma_b` gives
/// `f^2/4` per ordered pair, thirty pairs: `15/2 f^2`.
#[test]
fn quadratic_casimir_of_the_spinor() {
    for f in [rat_int(1), rat_int(2), rat(1, 3)] {
        let pt = point(rat_int(1), rat_int(-1), rat(16, 9), f.clone());
        let rep = rep_at(&pt);
        let c2 = casimir_matrix(&rep, rep.embedding.as_ref().unwrap(), CasimirKind::C2).unwrap();
        assert_eq!(
            c2.as_scalar(),
            Some(GaussRational::real(rat(15, 2) * &f * &f))
        );
    }
}

#[test]
fn all_casimirs_are_central() {
    let pt = point(rat_int(1), rat_int(-1), rat(16, 9), rat_int(1));
    let rep = rep_at(&pt);
    for which in [CasimirKind::C1, CasimirKind::C2, CasimirKind::C3] {
        let c = casimir_matrix(&rep, rep.embedding.as_ref().unwrap(), which).unwrap();
        assert!(non_commuting(&c, &rep.images).is_empty(), "{which:?}");
        assert!(!c.is_zero());
    }
}

#[test]
fn six_dimensional_representation() {
    for (h, f) in [(rat_int(2), rat_int(1)), (rat(1, 3), rat(1, 2))] {
        let pt = ParameterPoint::new(f, Rational::zero(), Rational::zero(), h).unwrap();
        let rep = six_dim_rep(&pt).unwrap();
        assert_eq!(rep.dim, 6);
        assert!(verify_rep(&rep, &hlm_at(&pt)).pass());
    }
    let deformed =
        ParameterPoint::new(rat_int(1), rat_int(1), Rational::zero(), rat_int(1)).unwrap();
    assert!(six_dim_rep(&deformed).is_err());
}

#[test]
fn reference_vector_representations() {
    for (p, q) in [(1, 5), (2, 4), (3, 3)] {
        let (images, alg): (Vec<CMatrix>, _) = reference_vector_rep(&signature_metric(p, q));
        assert_eq!(images.len(), 15);
        assert!(verify_images(&alg, &images).is_empty());
    }
}
