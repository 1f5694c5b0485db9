//! Acceptance suite: one test per criterion, run serially (a shared lock)
//! so the stated runtime budgets are measured without cross-test
//! contention. Each test prints a `criterion NN ... PASS (x.xx s)` line;
//! run with `--nocapture` to see them.

use std::sync::{Mutex, MutexGuard};
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use smirnov_core::{
    certified_max_modulus, certified_min_modulus, find_roots, from_roots, modified_smirnov,
    reduction_check, run_campaign, sharpness_scan, CampaignConfig, ComplexPolynomial,
    FamilyParams, GridOptions, Mutation, OperatorContext, Tolerances,
};

static LOCK: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

fn report(name: &str, started: Instant, budget: Option<f64>) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion {name}: PASS ({elapsed:.2} s)");
    if let Some(limit) = budget {
        assert!(
            elapsed < limit,
            "criterion {name} exceeded its {limit} s budget: {elapsed:.2} s"
        );
    }
}

fn campaign(entries: &[&str], trials: u64, seed: u64, cap: usize) -> CampaignConfig {
    CampaignConfig {
        entries: entries.iter().map(|s| s.to_string()).collect(),
        trials,
        seed,
        tolerances: Tolerances {
            extremum_grid_cap: cap,
            ..Tolerances::default()
        },
        ..CampaignConfig::default()
    }
}

#[test]
fn c01_operator_identity_on_monomials() {
    let _guard = serial();
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for n in 1..=32usize {
        for _ in 0..100 {
            let a = Complex64::from_polar(
                rng.gen_range(0.0f64..1.0).sqrt(),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            let p = ComplexPolynomial::monomial(n, Complex64::new(1.0, 0.0));
            let ctx = OperatorContext::new(a, n).unwrap();
            let image = modified_smirnov(&p, &ctx).unwrap();
            let expected = ComplexPolynomial::monomial(n - 1, Complex64::new(n as f64, 0.0));
            assert_eq!(image, expected, "exact identity failed at n = {n}, a = {a}");
        }
    }
    report("01 operator identity", started, Some(1.0));
}

#[test]
fn c02_main_minimum_bound_suite() {
    let _guard = serial();
    let started = Instant::now();
    let config = campaign(&["thm1-2.1"], 10_000, 2026, 1 << 16);
    let file = run_campaign(&config).unwrap();
    let r = &file.reports[0];
    assert_eq!(r.passes, 10_000, "failures: {}, errors: {}", r.failures, r.errors);

    // Equality of both sides on scaled monomials across the search grid.
    let fp = FamilyParams {
        n: 3,
        lambda: Complex64::new(2.0, 0.0),
        ..FamilyParams::default()
    };
    let sharp = sharpness_scan("thm1-2.1", &fp).unwrap();
    assert!(sharp.grid_points >= 1000, "grid has {}", sharp.grid_points);
    assert!(
        sharp.max_gap <= 1e-8,
        "worst relative gap over the grid: {}",
        sharp.max_gap
    );
    report("02 minimum-bound suite", started, Some(60.0));
}

#[test]
fn c03_main_bracket_bound_suite() {
    let _guard = serial();
    let started = Instant::now();
    let config = campaign(&["thm2-2.3"], 10_000, 2027, 1 << 16);
    let file = run_campaign(&config).unwrap();
    let r = &file.reports[0];
    assert_eq!(r.passes, 10_000, "failures: {}, errors: {}", r.failures, r.errors);

    let sharp = sharpness_scan("thm2-2.3", &FamilyParams::default()).unwrap();
    assert!(
        sharp.min_gap <= 1e-6,
        "best gap on the search grid: {}",
        sharp.min_gap
    );
    report("03 bracket-bound suite", started, Some(120.0));
}

#[test]
fn c04_classical_baseline_suites() {
    let _guard = serial();
    let started = Instant::now();
    let ids = [
        "bernstein-1.1",
        "growth-1.2",
        "erdos-lax-1.3",
        "ankeny-rivlin-1.4",
        "aziz-dawood-3",
        "aziz-dawood-4",
        "aziz-dawood-5",
        "aziz-dawood-6",
        "aziz-rather-1.5",
        "aziz-rather-1.6",
        "aziz-rather-7",
        "aziz-rather-8",
        "shah-fatima-1.8",
        "shah-fatima-1.9",
        "shah-fatima-1.10",
        "shah-fatima-1.11",
        "shah-fatima-9",
        "shah-fatima-10",
        "wani-liman-1.12",
        "wani-liman-1.13",
        "dewan-hans-1.14",
        "dewan-hans-1.15",
    ];
    let config = campaign(&ids, 1000, 2028, 1 << 15);
    let file = run_campaign(&config).unwrap();
    for r in &file.reports {
        assert_eq!(
            r.passes, 1000,
            "{}: failures {}, errors {} ({:?})",
            r.entry, r.failures, r.errors, r.first_error
        );
    }
    let sharp = sharpness_scan("erdos-lax-1.3", &FamilyParams::default()).unwrap();
    assert!(sharp.min_gap <= 1e-6, "equality-family gap {}", sharp.min_gap);
    report("04 classical baselines", started, None);
}

#[test]
fn c05_reduction_links() {
    let _guard = serial();
    let started = Instant::now();
    let specialize = [
        "thm1-a0-derivative",
        "sf19-a0-1.1",
        "sf111-a0-1.3",
        "thm1-ainvz-1.14",
        "thm1-ainvz-4",
        "thm2-ainvz-1.15",
        "sf19-ainvz-1.2",
        "sf111-ainvz-1.4",
        "thm1-r1-9",
        "thm2-r1-10",
    ];
    for id in specialize {
        let r = reduction_check(id, 1000, 2029).unwrap();
        assert!(r.pass, "{id} mismatched");
        assert!(
            r.max_rel_mismatch <= 1e-8,
            "{id}: worst mismatch {}",
            r.max_rel_mismatch
        );
    }
    for id in ["thm1-limit-2.2", "thm2-limit-2.4"] {
        let r = reduction_check(id, 100, 2029).unwrap();
        let order = r.min_order.unwrap();
        assert!(order >= 0.9, "{id}: observed order {order}");
    }
    for id in [
        "thm1-beta0-cor",
        "thm1-alpha0-cor",
        "thm2-beta0-cor",
        "thm2-alpha0-cor",
    ] {
        let r = reduction_check(id, 1000, 2029).unwrap();
        assert!(r.pass, "{id} mismatched");
    }
    report("05 reduction links", started, None);
}

#[test]
fn c06_circle_extrema_match_dense_sweep() {
    let _guard = serial();
    let started = Instant::now();

    // The quadratic with a circle root: extrema are exactly 2 and 0.
    let p = ComplexPolynomial::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ]);
    let mx = certified_max_modulus(&p, 1e-8).unwrap();
    assert!((mx.value - 2.0).abs() <= 1e-8);
    let mn = certified_min_modulus(&p, 1e-8).unwrap();
    assert!(mn.value.abs() <= 1e-8);

    let opts = GridOptions {
        initial: 4096,
        cap: 1 << 19,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let polys: Vec<ComplexPolynomial> = (0..200)
        .map(|_| {
            let d = rng.gen_range(1..=12usize);
            let coeffs: Vec<Complex64> = (0..=d)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            ComplexPolynomial::new(coeffs)
        })
        .collect();
    polys.par_iter().for_each(|p| {
        let samples = 1_000_000usize;
        let mut brute_max = f64::NEG_INFINITY;
        let mut brute_min = f64::INFINITY;
        let h = std::f64::consts::TAU / samples as f64;
        let step = Complex64::from_polar(1.0, h);
        let mut z = Complex64::new(1.0, 0.0);
        for j in 0..samples {
            if j % 8192 == 0 {
                z = Complex64::from_polar(1.0, h * j as f64);
            }
            let v = p.eval(z).norm();
            brute_max = brute_max.max(v);
            brute_min = brute_min.min(v);
            z *= step;
        }
        let n = p.degree() as f64;
        let mx = smirnov_core::circle::max_modulus_lenient(p, 1e-8, opts);
        // The sweep lower-bounds the true maximum and lags it by at most
        // the Lipschitz correction of its own spacing.
        let sweep_slop = n * (mx.value + mx.error_bound) * h;
        assert!(brute_max <= mx.value + mx.error_bound + 1e-12);
        assert!(brute_max >= mx.value - mx.error_bound - sweep_slop);
        let mn = smirnov_core::circle::min_modulus_lenient(p, 1e-8, opts);
        assert!(brute_min >= mn.value - mn.error_bound - 1e-12);
        assert!(brute_min <= mn.value + mn.error_bound + sweep_slop);
    });
    report("06 circle extrema vs dense sweep", started, Some(60.0));
}

#[test]
fn c07_root_finder_round_trip() {
    let _guard = serial();
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    for _ in 0..500 {
        let d = rng.gen_range(1..=12usize);
        // Well-separated roots: pairwise distance at least 0.1.
        let mut roots: Vec<Complex64> = Vec::with_capacity(d);
        while roots.len() < d {
            let candidate = Complex64::from_polar(
                rng.gen_range(0.15..2.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            if roots.iter().all(|r| (r - candidate).norm() >= 0.1) {
                roots.push(candidate);
            }
        }
        let leading = Complex64::from_polar(
            rng.gen_range(0.5..2.0),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let p = from_roots(&roots, leading);
        let set = find_roots(&p).unwrap();

        let mut remaining = set.roots.clone();
        let mut worst: f64 = 0.0;
        for &expected in &roots {
            let (idx, dist) = remaining
                .iter()
                .enumerate()
                .map(|(i, &f)| (i, (f - expected).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            worst = worst.max(dist);
            remaining.swap_remove(idx);
        }
        assert!(worst <= 1e-8, "round-trip error {worst}");

        let product: f64 = set.roots.iter().map(|r| r.norm()).product();
        let expected = (p.coeff(0) / leading).norm();
        assert!(
            (product - expected).abs() <= 1e-8 * expected.max(1.0),
            "vieta product {product} vs {expected}"
        );
    }
    report("07 root finder round trip", started, None);
}

#[test]
fn c08_lemma_suites() {
    let _guard = serial();
    let started = Instant::now();

    // Capped-root growth ratio at 256 angles, 200 polynomials, three R.
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for _ in 0..200 {
        let d = rng.gen_range(1..=10usize);
        let k = rng.gen_range(0.1..1.0);
        let roots: Vec<Complex64> = (0..d)
            .map(|_| {
                Complex64::from_polar(
                    k * rng.gen_range(0.0f64..1.0).sqrt(),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        let p = from_roots(&roots, Complex64::new(1.0, 0.0));
        for &r in &[1.5, 2.0, 3.0] {
            let bound = ((r + k) / (1.0 + k)).powi(d as i32);
            for j in 0..256 {
                let th = std::f64::consts::TAU * (j as f64 + 0.37) / 256.0;
                let z = Complex64::from_polar(1.0, th);
                assert!(
                    p.eval(z * r).norm() >= bound * p.eval(z).norm() * (1.0 - 1e-8),
                    "ratio bound failed at k = {k}, R = {r}"
                );
            }
        }
    }

    // Dominated-pair composite comparison and the reciprocal sum bound.
    let config = campaign(&["lemma3-3.2", "lemma4-3.3"], 1000, 2030, 1 << 15);
    let file = run_campaign(&config).unwrap();
    for r in &file.reports {
        assert_eq!(
            r.passes, 1000,
            "{}: failures {}, errors {}",
            r.entry, r.failures, r.errors
        );
    }
    report("08 lemma suites", started, None);
}

#[test]
fn c09_mutation_sensitivity() {
    let _guard = serial();
    let started = Instant::now();
    for (mutation, seed) in [
        (Mutation::KappaUsesAlpha, 5u64),
        (Mutation::DropDegreeTerm, 6u64),
    ] {
        let mut config = campaign(&["thm1-2.1"], 1000, seed, 1 << 15);
        config.degree_max = 6;
        config.mutation = Some(mutation);
        let file = run_campaign(&config).unwrap();
        let r = &file.reports[0];
        assert!(
            r.failures >= 1,
            "{mutation:?} produced no counterexample in 1000 trials"
        );
        let ce = r.counterexample.as_ref().expect("counterexample recorded");
        assert!(
            ce.instance.alpha.im != 0.0 || mutation == Mutation::DropDegreeTerm,
            "kappa defect must be caught on complex alpha"
        );
    }
    report("09 mutation sensitivity", started, None);
}

#[test]
fn c10_reports_are_deterministic() {
    let _guard = serial();
    let started = Instant::now();
    let dir = std::env::temp_dir();
    let mk = |tag: &str| {
        let mut config = campaign(&["thm1-2.1", "aziz-dawood-6"], 300, 77, 1 << 15);
        config.sharpness = true;
        config.reductions = true;
        config.out = Some(dir.join(format!("smirnov-acc-{tag}.json")).display().to_string());
        config.csv = Some(dir.join(format!("smirnov-acc-{tag}.csv")).display().to_string());
        config
    };
    let a = mk("a");
    let b = mk("b");
    let ra = run_campaign(&a).unwrap();
    let rb = run_campaign(&b).unwrap();
    // In-memory reports must agree except for the differing output paths.
    assert_eq!(
        serde_json::to_string(&ra.reports).unwrap(),
        serde_json::to_string(&rb.reports).unwrap()
    );
    let ja = std::fs::read(a.out.as_ref().unwrap()).unwrap();
    let jb = std::fs::read(b.out.as_ref().unwrap()).unwrap();
    let ja = String::from_utf8(ja).unwrap().replace("smirnov-acc-a", "smirnov-acc-x");
    let jb = String::from_utf8(jb).unwrap().replace("smirnov-acc-b", "smirnov-acc-x");
    assert_eq!(ja, jb, "JSON reports differ between identical runs");
    let ca = std::fs::read(a.csv.as_ref().unwrap()).unwrap();
    let cb = std::fs::read(b.csv.as_ref().unwrap()).unwrap();
    assert_eq!(ca, cb, "CSV trails differ between identical runs");
    report("10 deterministic reports", started, None);
}
