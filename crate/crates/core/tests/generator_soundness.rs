//! Generator soundness: across 1e5 draws per hypothesis class, an
//! independent re-classification never contradicts the class the
//! generator constructed (regenerated draws excluded by construction).

use num_complex::Complex64;
use rayon::prelude::*;
use smirnov_core::harness::{generate_for_entry, trial_rng, GeneratorSpec};
use smirnov_core::{classify_zeros, classify_zeros_with_cap, find_entry};

const DRAWS: u64 = 100_000;

fn spec() -> GeneratorSpec {
    GeneratorSpec {
        degree_max: 12,
        ..GeneratorSpec::default()
    }
}

#[test]
fn zeros_in_disk_class_is_sound() {
    let entry = find_entry("thm1-2.1").unwrap();
    let bad: u64 = (0..DRAWS)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(0xD15C, entry.id, i);
            let gen = generate_for_entry(entry, &spec(), &mut rng).unwrap();
            let loc = classify_zeros(&gen.instance.p).unwrap();
            u64::from(!loc.all_in_closed_disk() || loc.in_boundary_band())
        })
        .sum();
    assert_eq!(bad, 0, "misclassified draws: {bad}");
}

#[test]
fn nonvanishing_class_is_sound() {
    let entry = find_entry("thm2-2.3").unwrap();
    let bad: u64 = (0..DRAWS)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(0xE47E, entry.id, i);
            let gen = generate_for_entry(entry, &spec(), &mut rng).unwrap();
            let loc = classify_zeros(&gen.instance.p).unwrap();
            u64::from(!loc.none_in_open_disk() || loc.in_boundary_band())
        })
        .sum();
    assert_eq!(bad, 0, "misclassified draws: {bad}");
}

#[test]
fn capped_class_is_sound() {
    let entry = find_entry("lemma1-3.1").unwrap();
    let bad: u64 = (0..DRAWS)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(0xCA9, entry.id, i);
            let gen = generate_for_entry(entry, &spec(), &mut rng).unwrap();
            let k = gen.instance.cap_k.unwrap();
            let loc = classify_zeros_with_cap(&gen.instance.p, Some(k)).unwrap();
            u64::from(!loc.all_in_radius(k))
        })
        .sum();
    assert_eq!(bad, 0, "misclassified draws: {bad}");
}

#[test]
fn dominated_pair_class_is_sound() {
    let entry = find_entry("lemma3-3.2").unwrap();
    let bad: u64 = (0..DRAWS)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(0xD0, entry.id, i);
            let gen = generate_for_entry(entry, &spec(), &mut rng).unwrap();
            let p = &gen.instance.p;
            let f = gen.instance.f.as_ref().unwrap();
            let f_loc = classify_zeros(f).unwrap();
            if !f_loc.all_in_closed_disk() {
                return 1;
            }
            // Sampled domination with a strict construction margin.
            for j in 0..512 {
                let th = std::f64::consts::TAU * j as f64 / 512.0;
                let z = Complex64::from_polar(1.0, th);
                if p.eval(z).norm() > f.eval(z).norm() {
                    return 1;
                }
            }
            0
        })
        .sum();
    assert_eq!(bad, 0, "misclassified draws: {bad}");
}
