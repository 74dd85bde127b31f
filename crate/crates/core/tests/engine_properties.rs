//! Properties of the decision engine beyond the instance enumeration.

use bucert_core::engine::{self, Certificate};
use bucert_core::surface::{CyclicHom, SurfaceCase, SurfacePresentation};
use rand::{Rng, SeedableRng};

#[test]
fn odd_orders_never_have_the_property() {
    // For odd group order the distinguished image is forced trivial and a
    // power-of-g witness always exists.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let mut decided = 0;
    while decided < 200 {
        let n = [3usize, 5, 7, 9, 11][rng.gen_range(0..5)];
        let case = [
            SurfaceCase::Orientable,
            SurfaceCase::NonOrientableOdd,
            SurfaceCase::NonOrientableEven,
        ][rng.gen_range(0..3)];
        let m = rng.gen_range(0..=2);
        let pres = SurfacePresentation::new(case, m);
        if pres.generator_count() == 0 {
            continue;
        }
        let images: Vec<i64> = (0..pres.generator_count())
            .map(|_| rng.gen_range(0..n as i64))
            .collect();
        let theta = CyclicHom::new(pres, n, images).unwrap();
        if !theta.is_valid() {
            continue;
        }
        assert!(theta.theta_of_delta().is_zero());
        let decision = engine::decide(&theta).unwrap();
        assert!(!decision.has_bu_property);
        assert!(matches!(decision.certificate, Certificate::Witness(_)));
        decided += 1;
    }
}

#[test]
fn invalid_homomorphisms_are_input_errors() {
    // not surjective
    let pres = SurfacePresentation::orientable(1);
    let theta = CyclicHom::new(pres, 4, [2, 0]).unwrap();
    assert!(engine::decide(&theta).is_err());
    // relator image nonzero
    let pres = SurfacePresentation::nonorientable_odd(0);
    let theta = CyclicHom::new(pres, 4, [1]).unwrap();
    assert!(engine::decide(&theta).is_err());
}

#[test]
fn traced_relator_loop_matches_algebraic_product() {
    // the concatenated loop traces the identity braid, and so does the
    // algebraic product of the traced pair
    let k = 1;
    let (alpha, beta) = bucert_core::tracer::alpha_beta_cached(k).unwrap();
    let algebraic = alpha
        .compose(&beta)
        .unwrap()
        .compose(&alpha)
        .unwrap()
        .compose(&beta.inverse())
        .unwrap();
    let strands = bucert_core::tracer::relator_loop_strands(k, 1024).unwrap();
    let traced = bucert_core::tracer::trace_braid(&strands, bucert_core::tracer::DEFAULT_ANGLE)
        .unwrap();
    assert!(bucert_core::braid::garside::equal(algebraic.word(), &traced).unwrap());
}
