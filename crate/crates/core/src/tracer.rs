//! Numeric realization of the explicit order-4k torus action: the orbit map
//! into a planar annulus, lifts of the two Klein-bottle loops, and extraction
//! of the witness braid pair by crossing detection.
//!
//! The action on the unit-square torus is `tau(a,b) = (-a, a+b+1/4k)`. The
//! annulus map sends `(a,b)` to polar coordinates `(r(a), 2 pi b)` with a
//! piecewise-linear radius, and is injective on every orbit, so the 4k orbit
//! points of a moving basepoint sweep out a geometric braid. Floating point
//! is used only for tracing; every returned braid passes an exact algebraic
//! verification gate, and the free-action check runs in rational arithmetic.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::rational::Ratio;

use crate::braid::{garside, BraidWord, Permutation};
use crate::cyclic::CyclicBraid;
use crate::error::{Error, Result};
use crate::report::Report;

/// Environment variable naming a JSON cache of verified traced pairs.
pub const REGISTRY_ENV: &str = "BUCERT_REGISTRY";

/// Generic basepoint: away from the radius breakpoints and from the two
/// self-paired circles, so the orbit spreads over two circles of distinct
/// radii.
pub const BASEPOINT: (f64, f64) = (0.125, 0.0);

type Q = Ratio<i64>;

fn q(num: i64, den: i64) -> Q {
    Ratio::new(num, den)
}

fn fract(x: Q) -> Q {
    x - x.floor()
}

/// A point of the unit-square torus, reduced to `[0,1) x [0,1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    pub a: f64,
    pub b: f64,
}

impl TorusPoint {
    pub fn new(a: f64, b: f64) -> TorusPoint {
        TorusPoint {
            a: a.rem_euclid(1.0),
            b: b.rem_euclid(1.0),
        }
    }
}

/// `tau^i` in closed form: `(a, b + i/4k)` for even `i`, `(-a, a + b + i/4k)`
/// for odd `i`.
pub fn tau_pow(k: usize, i: usize, p: TorusPoint) -> TorusPoint {
    let n = 4 * k;
    let i = i % n;
    let shift = i as f64 / n as f64;
    if i % 2 == 0 {
        TorusPoint::new(p.a, p.b + shift)
    } else {
        TorusPoint::new(-p.a, p.a + p.b + shift)
    }
}

fn tau_pow_exact(k: usize, i: usize, p: (Q, Q)) -> (Q, Q) {
    let n = 4 * k as i64;
    let i = i % (4 * k);
    let shift = q(i as i64, n);
    if i % 2 == 0 {
        (fract(p.0), fract(p.1 + shift))
    } else {
        (fract(-p.0), fract(p.0 + p.1 + shift))
    }
}

/// Piecewise-linear radius in `[1,2]`, continuous on the circle.
fn radial(a: f64) -> f64 {
    let a = a.rem_euclid(1.0);
    if a <= 0.25 {
        (3.0 - 4.0 * a) / 2.0
    } else if a <= 0.75 {
        (1.0 + 4.0 * a) / 2.0
    } else {
        (7.0 - 4.0 * a) / 2.0
    }
}

/// The orbit map into the plane: polar point `(r(a), 2 pi b)`.
pub fn annulus_map(p: TorusPoint) -> (f64, f64) {
    let r = radial(p.a);
    let theta = std::f64::consts::TAU * p.b;
    (r * theta.cos(), r * theta.sin())
}

/// Which Klein-bottle loop to lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopChoice {
    U,
    V,
}

/// Lift of the chosen loop to the universal cover, based at the basepoint:
/// `u` runs once around horizontally (ending at `tau^{2k}` of the basepoint),
/// `v` runs to `tau` of the basepoint along a straight segment.
fn lift(k: usize, choice: LoopChoice, t: f64) -> (f64, f64) {
    let (a0, b0) = BASEPOINT;
    match choice {
        LoopChoice::U => (a0 + t, b0 - t / 2.0),
        LoopChoice::V => (
            a0 - t / 4.0,
            b0 + t * (0.125 + 1.0 / (4.0 * k as f64)),
        ),
    }
}

fn lift_exact(k: usize, choice: LoopChoice, t: Q) -> (Q, Q) {
    let a0 = q(1, 8);
    match choice {
        LoopChoice::U => (a0 + t, -t / q(2, 1)),
        LoopChoice::V => (a0 - t / q(4, 1), t * (q(1, 8) + q(1, 4 * k as i64))),
    }
}

/// Time-indexed planar positions of the 4k orbit strands of a moving point.
#[derive(Debug, Clone)]
pub struct StrandSet {
    pub k: usize,
    pub strand_count: usize,
    pub times: Vec<f64>,
    /// `samples[time][strand]`
    pub samples: Vec<Vec<(f64, f64)>>,
    /// strand `i` ends at the start position of strand `i + endpoint_shift`
    pub endpoint_shift: usize,
}

fn strand_set_from_path(
    k: usize,
    path: impl Fn(f64) -> (f64, f64),
    resolution: usize,
    endpoint_shift: usize,
) -> Result<StrandSet> {
    let n = 4 * k;
    let mut times = Vec::with_capacity(resolution + 1);
    let mut samples = Vec::with_capacity(resolution + 1);
    for s in 0..=resolution {
        let t = s as f64 / resolution as f64;
        let (la, lb) = path(t);
        let base = TorusPoint::new(la, lb);
        let row: Vec<(f64, f64)> = (0..n).map(|i| annulus_map(tau_pow(k, i, base))).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                let dx = row[i].0 - row[j].0;
                let dy = row[i].1 - row[j].1;
                if dx * dx + dy * dy < 1e-18 {
                    return Err(Error::Resolution { t, i, j });
                }
            }
        }
        times.push(t);
        samples.push(row);
    }
    // strands must close up onto the start configuration, cyclically shifted
    let first = &samples[0];
    let last = &samples[samples.len() - 1];
    for i in 0..n {
        let target = first[(i + endpoint_shift) % n];
        let dx = last[i].0 - target.0;
        let dy = last[i].1 - target.1;
        if dx * dx + dy * dy > 1e-14 {
            return Err(Error::Tracing(format!(
                "strand {i} does not end at the start of strand {}",
                (i + endpoint_shift) % n
            )));
        }
    }
    Ok(StrandSet {
        k,
        strand_count: n,
        times,
        samples,
        endpoint_shift,
    })
}

/// Samples the strands `t -> h(tau^i(xi(t)))` of the lifted loop.
pub fn orbit_strands(k: usize, choice: LoopChoice, resolution: usize) -> Result<StrandSet> {
    if k < 1 {
        return Err(Error::Domain("need k >= 1".into()));
    }
    if resolution < 64 {
        return Err(Error::Domain("need resolution >= 64".into()));
    }
    let shift = match choice {
        LoopChoice::U => 2 * k,
        LoopChoice::V => 1,
    };
    strand_set_from_path(k, |t| lift(k, choice, t), resolution, shift)
}

/// Strands of the concatenated relator loop `u v u v^{-1}`, which must trace
/// the identity braid.
pub fn relator_loop_strands(k: usize, resolution: usize) -> Result<StrandSet> {
    if k < 1 {
        return Err(Error::Domain("need k >= 1".into()));
    }
    if resolution < 64 {
        return Err(Error::Domain("need resolution >= 64".into()));
    }
    let n = 4 * k;
    let piece = move |t: f64| -> (f64, f64) {
        let scaled = t * 4.0;
        let idx = (scaled.floor() as usize).min(3);
        let local = scaled - idx as f64;
        let (la, lb) = match idx {
            0 => lift(k, LoopChoice::U, local),
            1 => lift(k, LoopChoice::V, local),
            2 => lift(k, LoopChoice::U, local),
            _ => lift(k, LoopChoice::V, 1.0 - local),
        };
        // apply the deck shift accumulated by the previous pieces
        let deck = match idx {
            0 => 0,
            1 => 2 * k,
            2 => 2 * k + 1,
            _ => 0,
        };
        let p = tau_pow(k, deck % n, TorusPoint::new(la, lb));
        (p.a, p.b)
    };
    strand_set_from_path(k, piece, resolution, 0)
}

/// Reads the Artin word of a strand motion by projecting onto the direction
/// of `projection_angle` and emitting a crossing whenever two strands
/// adjacent in projected order swap. The sign convention is calibrated so
/// that two points making a half turn counterclockwise yield the positive
/// generator. Non-generic projections are detected and retried with a small
/// deterministic perturbation.
pub fn trace_braid(strands: &StrandSet, projection_angle: f64) -> Result<BraidWord> {
    let mut last_err = None;
    for attempt in 0..8 {
        let angle = projection_angle + attempt as f64 * 1.7e-3;
        match trace_once(strands, angle) {
            Ok(word) => return Ok(word),
            Err(e @ Error::Tracing(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap())
}

// Ties in projected position are resolved by the stable sort; a crossing
// sitting exactly on a sample lands in one of the two adjacent segments
// either way, and genuine tangencies are caught by the transverse-gap
// threshold at emission time.
fn sorted_order(row: &[(f64, f64)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..row.len()).collect();
    order.sort_by(|&i, &j| row[i].0.partial_cmp(&row[j].0).unwrap());
    order
}

fn project(row: &[(f64, f64)], angle: f64) -> Vec<(f64, f64)> {
    let (c, s) = (angle.cos(), angle.sin());
    row.iter()
        .map(|&(x, y)| (c * x + s * y, -s * x + c * y))
        .collect()
}

fn lerp_row(p0: &[(f64, f64)], p1: &[(f64, f64)], t: f64) -> Vec<(f64, f64)> {
    p0.iter()
        .zip(p1)
        .map(|(&(x0, y0), &(x1, y1))| (x0 + (x1 - x0) * t, y0 + (y1 - y0) * t))
        .collect()
}

fn emit_segment(
    p0: &[(f64, f64)],
    p1: &[(f64, f64)],
    order: &mut Vec<usize>,
    letters: &mut Vec<i32>,
    depth: usize,
    t0: f64,
    t1: f64,
) -> Result<()> {
    let target = sorted_order(p1);
    if *order == target {
        return Ok(());
    }
    // A set of disjoint adjacent transpositions? Simultaneous crossings of
    // disjoint position pairs commute as braid letters, and they do occur
    // structurally: the half-orbit deck transformation is the antipodal map
    // of the annulus, so mirror strand pairs swap at the same instant.
    let mut swaps: Vec<usize> = Vec::new();
    let mut p = 0;
    let mut decomposes = true;
    while p < order.len() {
        if order[p] == target[p] {
            p += 1;
        } else if p + 1 < order.len()
            && order[p] == target[p + 1]
            && order[p + 1] == target[p]
        {
            swaps.push(p);
            p += 2;
        } else {
            decomposes = false;
            break;
        }
    }
    if decomposes {
        for &p in &swaps {
            let (i, j) = (order[p], order[p + 1]); // i left before the swap
            let dx0 = p0[i].0 - p0[j].0;
            let dx1 = p1[i].0 - p1[j].0;
            let denom = dx0 - dx1;
            if denom.abs() < 1e-300 {
                return Err(Error::Tracing(format!(
                    "parallel strands {i},{j} in [{t0},{t1}]"
                )));
            }
            let tc = dx0 / denom;
            let dd0 = p0[i].1 - p0[j].1;
            let dd1 = p1[i].1 - p1[j].1;
            let dd = dd0 + (dd1 - dd0) * tc;
            if dd.abs() < 1e-12 {
                return Err(Error::Tracing(format!(
                    "unresolved near-tangency of strands {i},{j} in [{t0},{t1}]"
                )));
            }
            let letter = (p + 1) as i32;
            letters.push(if dd < 0.0 { letter } else { -letter });
        }
        for &p in &swaps {
            order.swap(p, p + 1);
        }
        return Ok(());
    }
    if depth >= 40 {
        return Err(Error::Tracing(format!(
            "refinement cap reached in [{t0},{t1}]"
        )));
    }
    let mid = lerp_row(p0, p1, 0.5);
    let tm = 0.5 * (t0 + t1);
    emit_segment(p0, &mid, order, letters, depth + 1, t0, tm)?;
    emit_segment(&mid, p1, order, letters, depth + 1, tm, t1)
}

fn trace_once(strands: &StrandSet, angle: f64) -> Result<BraidWord> {
    let n = strands.strand_count;
    let proj: Vec<Vec<(f64, f64)>> = strands
        .samples
        .iter()
        .map(|row| project(row, angle))
        .collect();
    let order0 = sorted_order(&proj[0]);
    let mut order = order0.clone();
    let mut letters: Vec<i32> = Vec::new();
    for seg in 0..proj.len() - 1 {
        emit_segment(
            &proj[seg],
            &proj[seg + 1],
            &mut order,
            &mut letters,
            0,
            strands.times[seg],
            strands.times[seg + 1],
        )?;
    }
    let word = BraidWord::new(n, letters)?;
    // cross-check: the word's permutation must send each start position to
    // the strand's final position
    let mut expected = vec![0usize; n];
    for (pos_end, &strand) in order.iter().enumerate() {
        let pos_start = order0.iter().position(|&s| s == strand).unwrap();
        expected[pos_start] = pos_end;
    }
    let expected = Permutation::from_images(expected).unwrap();
    if word.permutation() != expected {
        return Err(Error::Tracing(
            "traced word permutation disagrees with observed strand motion".into(),
        ));
    }
    // Comb the configuration: conjugate by a braid identifying diagram
    // position p with the strand label found at position p at time zero, so
    // that the cyclic endpoint shift of the orbit labels becomes a cyclic
    // shift of positions. Both loops start from the same configuration and
    // receive the same combing, which preserves all relations among traced
    // braids and the projections to the cyclic group.
    let mut pos_of_label = vec![0usize; n];
    for (pos, &label) in order0.iter().enumerate() {
        pos_of_label[label] = pos;
    }
    let lambda_inv = Permutation::from_images(pos_of_label).unwrap();
    let comb = BraidWord::new(n, garside::simple_to_letters(&lambda_inv))?;
    comb.compose(&word)?.compose(&comb.inverse())
}

/// Traced pair for the two Klein-bottle loops, with the global orientation
/// fixed by calibration: if the cyclic class of the traced `v` braid is `-1`,
/// both braids are inverted (the loops are read in the reversed direction),
/// which preserves the defining relation. All three gate conditions are
/// verified before returning.
pub fn alpha_beta_with(
    k: usize,
    resolution: usize,
    angle: f64,
) -> Result<(CyclicBraid, CyclicBraid)> {
    let n = 4 * k;
    let su = orbit_strands(k, LoopChoice::U, resolution)?;
    let sv = orbit_strands(k, LoopChoice::V, resolution)?;
    let alpha_raw = trace_braid(&su, angle)?;
    let beta_raw = trace_braid(&sv, angle)?;
    let beta = CyclicBraid::new(beta_raw)
        .map_err(|e| Error::Tracing(format!("traced v braid not in the cyclic subgroup: {e}")))?;
    let (alpha_word, beta) = match beta.pi2().value() {
        1 => (alpha_raw, beta),
        v if v == (n - 1) as u64 => (alpha_raw.inverse(), beta.inverse()),
        v => {
            return Err(Error::Tracing(format!(
                "traced v braid has cyclic class {v}, expected 1 or {}",
                n - 1
            )))
        }
    };
    let alpha = CyclicBraid::new(alpha_word)
        .map_err(|e| Error::Tracing(format!("traced u braid not in the cyclic subgroup: {e}")))?;
    verify_pair(k, &alpha, &beta)?;
    Ok((alpha, beta))
}

/// Default-parameter tracing.
pub fn alpha_beta(k: usize) -> Result<(CyclicBraid, CyclicBraid)> {
    alpha_beta_with(k, 1024, DEFAULT_ANGLE)
}

pub const DEFAULT_ANGLE: f64 = 0.37;

/// The three gate conditions: projections 2k and 1, and the braid relation
/// `alpha beta alpha beta^{-1} = 1`. Failures are errors, never accepted.
pub fn verify_pair(k: usize, alpha: &CyclicBraid, beta: &CyclicBraid) -> Result<()> {
    let n = 4 * k;
    if alpha.n() != n || beta.n() != n {
        return Err(Error::Tracing(format!(
            "pair on {} / {} strands, expected {n}",
            alpha.n(),
            beta.n()
        )));
    }
    if alpha.pi2().value() != (2 * k) as u64 {
        return Err(Error::Tracing(format!(
            "pi2(alpha) = {}, expected {}",
            alpha.pi2(),
            2 * k
        )));
    }
    if beta.pi2().value() != 1 {
        return Err(Error::Tracing(format!(
            "pi2(beta) = {}, expected 1",
            beta.pi2()
        )));
    }
    let relation = alpha
        .compose(beta)?
        .compose(alpha)?
        .compose(&beta.inverse())?;
    if !garside::is_trivial(relation.word()) {
        return Err(Error::Tracing(
            "alpha beta alpha beta^{-1} does not reduce to the identity".into(),
        ));
    }
    Ok(())
}

/// Traced pair with in-process memoization and an optional on-disk registry
/// (see [`REGISTRY_ENV`]). Registry entries are re-verified before use.
pub fn alpha_beta_cached(k: usize) -> Result<(CyclicBraid, CyclicBraid)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, (CyclicBraid, CyclicBraid)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(pair) = cache.lock().unwrap().get(&k) {
        return Ok(pair.clone());
    }
    if let Some(pair) = registry_load(k) {
        cache.lock().unwrap().insert(k, pair.clone());
        return Ok(pair);
    }
    let pair = alpha_beta(k)?;
    cache.lock().unwrap().insert(k, pair.clone());
    registry_store(k, &pair);
    Ok(pair)
}

fn registry_path() -> Option<std::path::PathBuf> {
    std::env::var_os(REGISTRY_ENV).map(std::path::PathBuf::from)
}

fn registry_load(k: usize) -> Option<(CyclicBraid, CyclicBraid)> {
    let path = registry_path()?;
    let text = std::fs::read_to_string(path).ok()?;
    let json: serde_json::Value = serde_json::from_str(&text).ok()?;
    let entry = json.get("pairs")?.get(k.to_string())?;
    let alpha = BraidWord::parse(entry.get("alpha")?.as_str()?).ok()?;
    let beta = BraidWord::parse(entry.get("beta")?.as_str()?).ok()?;
    let alpha = CyclicBraid::new(alpha).ok()?;
    let beta = CyclicBraid::new(beta).ok()?;
    verify_pair(k, &alpha, &beta).ok()?;
    Some((alpha, beta))
}

fn registry_store(k: usize, pair: &(CyclicBraid, CyclicBraid)) {
    let Some(path) = registry_path() else { return };
    let mut json: serde_json::Value = std::fs::read_to_string(&path)
        .ok()
        .and_then(|text| serde_json::from_str(&text).ok())
        .unwrap_or_else(|| serde_json::json!({ "schema": 1, "pairs": {} }));
    json["pairs"][k.to_string()] = serde_json::json!({
        "alpha": pair.0.word().to_string(),
        "beta": pair.1.word().to_string(),
    });
    let _ = std::fs::write(&path, serde_json::to_string_pretty(&json).unwrap_or_default());
}

/// Exact-arithmetic checks that the lift formulas close up correctly: the
/// `u` lift ends at `tau^{2k}` of the basepoint, the `v` lift at `tau` of it,
/// and composing with the intermediate covering `f(a,b) = (a, ka+2kb)` shows
/// the loops wind as required (constant height and one horizontal turn for
/// `u`; a half vertical turn compatible with the double cover for `v`).
pub fn lift_endpoint_checks(k: usize) -> Report {
    let mut report = Report::new();
    let x0 = (q(1, 8), q(0, 1));
    let f = |p: (Q, Q)| (p.0, q(k as i64, 1) * p.0 + q(2 * k as i64, 1) * p.1);
    let reduce = |p: (Q, Q)| (fract(p.0), fract(p.1));

    let u1 = reduce(lift_exact(k, LoopChoice::U, q(1, 1)));
    let expected_u = tau_pow_exact(k, 2 * k, x0);
    report.record(
        "u_lift_ends_at_tau_2k",
        vec![k as i64],
        format!("({}, {})", u1.0, u1.1),
        format!("({}, {})", expected_u.0, expected_u.1),
        u1 == expected_u,
    );

    let v1 = reduce(lift_exact(k, LoopChoice::V, q(1, 1)));
    let expected_v = tau_pow_exact(k, 1, x0);
    report.record(
        "v_lift_ends_at_tau",
        vec![k as i64],
        format!("({}, {})", v1.0, v1.1),
        format!("({}, {})", expected_v.0, expected_v.1),
        v1 == expected_v,
    );

    // f of the u lift keeps constant height and advances a by exactly one
    let fu0 = f(lift_exact(k, LoopChoice::U, q(0, 1)));
    let fu_half = f(lift_exact(k, LoopChoice::U, q(1, 2)));
    let fu1 = f(lift_exact(k, LoopChoice::U, q(1, 1)));
    report.record(
        "u_projects_to_horizontal_loop",
        vec![k as i64],
        format!("heights {} {} {}", fu0.1, fu_half.1, fu1.1),
        format!("constant, da = {}", fu1.0 - fu0.0),
        fu0.1 == fu_half.1 && fu0.1 == fu1.1 && fu1.0 - fu0.0 == q(1, 1),
    );

    // f of the v lift ends at the nontrivial deck transformation
    // (a,b) -> (-a, b+1/2) of the double cover applied to its start
    let fv0 = f(lift_exact(k, LoopChoice::V, q(0, 1)));
    let fv1 = f(lift_exact(k, LoopChoice::V, q(1, 1)));
    let deck = (fract(-fv0.0), fract(fv0.1 + q(1, 2)));
    report.record(
        "v_projects_to_half_vertical_loop",
        vec![k as i64],
        format!("({}, {})", fract(fv1.0), fract(fv1.1)),
        format!("({}, {})", deck.0, deck.1),
        (fract(fv1.0), fract(fv1.1)) == deck,
    );

    report
}

/// Exhaustive freeness check on rational points: for each sampled point all
/// `tau^i`, `0 <= i < 4k`, are pairwise distinct, in exact arithmetic. Runs
/// the two self-paired circles (`a = 0` and `a = 1/2`, where the parity
/// argument matters) plus `trials` pseudorandom rational points.
pub fn check_free_action(k: usize, trials: usize) -> Report {
    let n = 4 * k;
    let mut report = Report::new();
    let check_point = |label: &str, p: (Q, Q), report: &mut Report| {
        let orbit: Vec<(Q, Q)> = (0..n).map(|i| tau_pow_exact(k, i, p)).collect();
        let mut distinct = true;
        for i in 0..n {
            for j in (i + 1)..n {
                if orbit[i] == orbit[j] {
                    distinct = false;
                }
            }
        }
        report.record(
            label,
            vec![k as i64, n as i64],
            format!("({}, {})", p.0, p.1),
            format!("{n} distinct orbit points"),
            distinct,
        );
    };
    check_point("free_orbit_half_a", (q(1, 2), q(0, 1)), &mut report);
    check_point("free_orbit_zero_a", (q(0, 1), q(0, 1)), &mut report);
    check_point("free_orbit_basepoint", (q(1, 8), q(0, 1)), &mut report);

    let mut state = 0x9e3779b97f4a7c15u64 ^ (k as u64);
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state
    };
    for _ in 0..trials {
        let da = (next() % 997 + 1) as i64;
        let na = (next() % da as u64) as i64;
        let db = (next() % 997 + 1) as i64;
        let nb = (next() % db as u64) as i64;
        check_point("free_orbit", (q(na, da), q(nb, db)), &mut report);
    }
    report
}

/// Full tracing run for the command line: the verified pair plus a report of
/// every check performed (lift endpoints, gates, endpoint permutations, the
/// traced relator loop).
pub fn trace_with_provenance(
    k: usize,
    resolution: usize,
    angle: f64,
) -> Result<(CyclicBraid, CyclicBraid, Report)> {
    let mut report = lift_endpoint_checks(k);
    let (alpha, beta) = alpha_beta_with(k, resolution, angle)?;
    report.record(
        "pi2_alpha",
        vec![k as i64],
        alpha.pi2().to_string(),
        format!("{} mod {}", 2 * k, 4 * k),
        alpha.pi2().value() == (2 * k) as u64,
    );
    report.record(
        "pi2_beta",
        vec![k as i64],
        beta.pi2().to_string(),
        format!("1 mod {}", 4 * k),
        beta.pi2().value() == 1,
    );
    let relation = alpha
        .compose(&beta)?
        .compose(&alpha)?
        .compose(&beta.inverse())?;
    report.record(
        "commutation_relation",
        vec![k as i64],
        "alpha beta alpha beta^{-1}",
        "identity braid",
        garside::is_trivial(relation.word()),
    );
    let relator = relator_loop_strands(k, resolution)?;
    let relator_word = trace_braid(&relator, angle)?;
    report.record(
        "traced_relator_loop_trivial",
        vec![k as i64],
        relator_word.to_string(),
        BraidWord::identity(4 * k)?.to_string(),
        garside::is_trivial(&relator_word),
    );
    registry_store(k, &(alpha.clone(), beta.clone()));
    Ok((alpha, beta, report))
}
