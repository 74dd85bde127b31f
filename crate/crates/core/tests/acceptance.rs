//! Acceptance suite: each test runs one criterion end-to-end at its stated
//! tolerance and prints a PASS/FAIL line (run with `-- --nocapture` to see
//! them on success).

mod common;

use std::time::Instant;

use bucert_core::braid::{cycle_braid, garside};
use bucert_core::cyclic::verify_full_presentation;
use bucert_core::engine::{self, Certificate};
use bucert_core::pure::full_twist;
use bucert_core::sigma::{self, SigmaExample};
use bucert_core::surface::{CyclicHom, SurfaceCase, SurfacePresentation};
use bucert_core::tracer;
use common::{equivalent_variant, oracle_equal, random_word};
use rand::SeedableRng;

fn finish(criterion: &str, pass: bool, started: Instant, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} ({:.2?}) {detail}",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_presentation_verification() {
    let started = Instant::now();
    let mut instances = 0;
    let mut failures = 0;
    for n in 2..=6 {
        let report = verify_full_presentation(n).unwrap();
        instances += report.len();
        failures += report.failures().count();
        // the full-twist relation g^n = Delta_n^2 is itself an instance
        let g = cycle_braid(n).unwrap();
        if !garside::equal(&g.pow(n as i64), full_twist(n).unwrap().word()).unwrap() {
            failures += 1;
        }
    }
    let pass = failures == 0 && started.elapsed().as_secs() < 120;
    finish(
        "1 presentation-verification",
        pass,
        started,
        &format!("{instances} instances, {failures} failures"),
    );
}

#[test]
fn criterion_2_evaluation_homomorphism() {
    let started = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    for n in 2..=10usize {
        let eps = full_twist(n).unwrap().epsilon();
        let closed = (n * (n - 1) / 2) as i64;
        if eps != closed {
            pass = false;
            detail = format!("eps({n}) = {eps} != {closed}");
        }
        let odd_expected = n % 4 == 2 || n % 4 == 3;
        if (eps % 2 != 0) != odd_expected {
            pass = false;
            detail = format!("parity of eps({n}) wrong");
        }
        if n % 4 == 2 {
            let k = ((n - 2) / 4) as i64;
            if eps != (2 * k + 1) * (4 * k + 1) {
                pass = false;
                detail = format!("eps({n}) != (2k+1)(4k+1)");
            }
        }
    }
    finish("2 evaluation-homomorphism", pass, started, &detail);
}

/// All homomorphism image tuples for a presentation, filtered to the valid
/// ones.
fn valid_instances(case: SurfaceCase, m: usize, n: usize) -> Vec<CyclicHom> {
    let pres = SurfacePresentation::new(case, m);
    let gens = pres.generator_count();
    let mut out = Vec::new();
    if gens == 0 {
        return out;
    }
    let mut images = vec![0i64; gens];
    loop {
        let theta = CyclicHom::new(pres, n, images.iter().copied()).unwrap();
        if theta.is_valid() {
            out.push(theta);
        }
        let mut idx = 0;
        while idx < gens {
            images[idx] += 1;
            if images[idx] < n as i64 {
                break;
            }
            images[idx] = 0;
            idx += 1;
        }
        if idx == gens {
            break;
        }
    }
    out
}

#[test]
fn criterion_3_decision_soundness() {
    let started = Instant::now();
    let mut total = 0u64;
    let mut with_property = 0u64;
    for case in [
        SurfaceCase::Orientable,
        SurfaceCase::NonOrientableOdd,
        SurfaceCase::NonOrientableEven,
    ] {
        for m in 0..=2usize {
            for n in 2..=12usize {
                for theta in valid_instances(case, m, n) {
                    total += 1;
                    let decision = engine::decide(&theta).expect("valid instance decides");
                    assert_eq!(
                        decision.has_bu_property,
                        engine::bu_predicate(&theta),
                        "verdict mismatch at {case:?} m={m} n={n} images={:?}",
                        theta.images()
                    );
                    match decision.certificate {
                        Certificate::Witness(w) => {
                            assert!(
                                engine::verify_witness_ok(&w, &theta).unwrap(),
                                "witness fails at {case:?} m={m} n={n} images={:?}",
                                theta.images()
                            );
                        }
                        Certificate::ParityObstruction(o) => {
                            with_property += 1;
                            assert!(decision.has_bu_property);
                            assert_eq!(o.full_twist_eps % 2, 1, "full twist evaluation must be odd");
                            assert_eq!(
                                o.full_twist_eps,
                                full_twist(n).unwrap().epsilon(),
                                "obstruction evaluation must come from the band product"
                            );
                        }
                        other => panic!("unexpected certificate {}", other.kind()),
                    }
                }
            }
        }
    }
    let pass = total > 0 && started.elapsed().as_secs() < 600;
    finish(
        "3 decision-soundness",
        pass,
        started,
        &format!("{total} instances decided, {with_property} with the property"),
    );
}

#[test]
fn criterion_4_geometric_tracer() {
    let started = Instant::now();
    let angle = tracer::DEFAULT_ANGLE;

    let (alpha, beta) = tracer::alpha_beta_with(1, 1024, angle).unwrap();
    assert_eq!(alpha.pi2().value(), 2);
    assert_eq!(beta.pi2().value(), 1);
    tracer::verify_pair(1, &alpha, &beta).unwrap();

    // stability of the equality class under resolution doubling and a
    // 0.1-rad projection change
    let (alpha2, beta2) = tracer::alpha_beta_with(1, 2048, angle).unwrap();
    assert!(garside::equal(alpha.word(), alpha2.word()).unwrap());
    assert!(garside::equal(beta.word(), beta2.word()).unwrap());
    let (alpha3, beta3) = tracer::alpha_beta_with(1, 1024, angle + 0.1).unwrap();
    assert!(garside::equal(alpha.word(), alpha3.word()).unwrap());
    assert!(garside::equal(beta.word(), beta3.word()).unwrap());

    let k2_start = Instant::now();
    let (a2, b2) = tracer::alpha_beta_with(2, 1024, angle).unwrap();
    tracer::verify_pair(2, &a2, &b2).unwrap();
    let k2_ok = k2_start.elapsed().as_secs() < 300;

    let mut free_ok = true;
    for k in 1..=3 {
        let report = tracer::check_free_action(k, 1000);
        free_ok &= report.passed();
    }

    finish(
        "4 geometric-tracer",
        k2_ok && free_ok,
        started,
        &format!("alpha = {}, beta = {}", alpha.word(), beta.word()),
    );
}

#[test]
fn criterion_5_word_problem_cross_validation() {
    let started = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xBADA55);
    let mut disagreements = 0u64;
    let mut equal_pairs = 0u64;
    let pairs = 10_000u64;
    for round in 0..pairs {
        let n = 2 + (round % 4) as usize; // up to 5 strands
        let w1 = random_word(&mut rng, n, 25);
        let w2 = if round % 4 == 0 {
            equivalent_variant(&mut rng, &w1)
        } else {
            random_word(&mut rng, n, 25)
        };
        let garside_verdict = garside::equal(&w1, &w2).unwrap();
        if garside_verdict {
            equal_pairs += 1;
        }
        if garside_verdict != oracle_equal(&w1, &w2) {
            disagreements += 1;
        }
    }
    finish(
        "5 word-problem-cross-validation",
        disagreements == 0,
        started,
        &format!("{pairs} pairs, {equal_pairs} equal, {disagreements} disagreements"),
    );
}

#[test]
fn criterion_6_symmetric_group_suite() {
    let started = Instant::now();
    let mut pass = true;
    let mut detail = String::new();

    for n in 3..=6 {
        let report = sigma::witness_m1(n).unwrap();
        if !report.passed() {
            pass = false;
            detail = format!("witness_m1({n}) failed");
        }
    }
    for n in 3..=6 {
        let report = sigma::parity_obstruction_m2(n).unwrap();
        if !report.passed() {
            pass = false;
            detail = format!("parity_obstruction_m2({n}) failed");
        }
        if !report
            .checks
            .iter()
            .any(|c| c.relation == "parity_contradiction")
        {
            pass = false;
            detail = format!("parity_obstruction_m2({n}) missing the contradiction record");
        }
    }
    // make sure the homomorphisms themselves validate
    for n in 3..=6 {
        assert!(sigma::build_theta(SigmaExample::M1, n).is_ok());
        assert!(sigma::build_theta(SigmaExample::M2, n).is_ok());
    }

    let decision = sigma::decide_m2_cyclic(6, false).unwrap();
    if decision.has_bu_property {
        pass = false;
        detail = "m2-cyclic at n=6 must not have the property".into();
    }
    match decision.certificate {
        Certificate::Homology(h) => {
            if h.index != 120
                || h.h1_torsion != vec![2]
                || h.h1_rank != 121
                || !h.delta_image.is_zero()
                || !h.cover_nonorientable
                || !h.report.passed()
            {
                pass = false;
                detail = format!(
                    "m2-cyclic evidence: index={} rank={} torsion={:?} delta={}",
                    h.index, h.h1_rank, h.h1_torsion, h.delta_image
                );
            }
        }
        other => {
            pass = false;
            detail = format!("unexpected certificate {}", other.kind());
        }
    }
    let in_time = started.elapsed().as_secs() < 300;
    finish(
        "6 symmetric-group-suite",
        pass && in_time,
        started,
        &detail,
    );
}
