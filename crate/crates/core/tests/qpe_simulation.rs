mod common;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use redheffer_core::inequality::{corollary_lhs, success_bound};
use redheffer_core::qpe::{
    closed_form_prob, inverse_qft, inverse_qft_direct, outcome_distribution, phase_state, qft, qft_direct,
    success_probability, StateVector,
};

use common::{brute_force_prob, tensor_phase_state};

fn random_state(rng: &mut impl Rng, n: u32) -> StateVector {
    let raw: Vec<Complex64> = (0..1usize << n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    StateVector::from_amplitudes(n, raw.into_iter().map(|a| a / norm).collect()).unwrap()
}

fn max_diff(a: &StateVector, b: &StateVector) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(u, v)| (u - v).norm_sqr().sqrt())
        .fold(0.0, f64::max)
}

/// Non-dyadic phase: 2ⁿw is never an integer.
fn random_phase(rng: &mut impl Rng, n: u32) -> f64 {
    loop {
        let w: f64 = rng.gen();
        if (w * (1u64 << n) as f64).fract() != 0.0 {
            return w;
        }
    }
}

#[test]
fn worked_example_matches_brute_force_oracle() {
    let oracle: Vec<f64> = (0..4).map(|x| brute_force_prob(2, 0.125, x)).collect();
    let expected = [
        0.42677669529663687,
        0.42677669529663687,
        0.07322330470336313,
        0.07322330470336313,
    ];
    for (o, e) in oracle.iter().zip(expected) {
        assert!((o - e).abs() < 1e-14);
    }
    assert!((oracle[0] + oracle[1] - (2.0 + 2f64.sqrt()) / 4.0).abs() < 1e-12);

    let dist = outcome_distribution(2, 0.125).unwrap();
    for (x, (&p, &o)) in dist.probs.iter().zip(&oracle).enumerate() {
        assert!((p - o).abs() < 1e-12);
        assert!((closed_form_prob(2, 0.125, x as u64).unwrap() - o).abs() < 1e-12);
    }
    let report = success_probability(2, 0.125).unwrap();
    assert!((report.success_prob - (2.0 + 2f64.sqrt()) / 4.0).abs() < 1e-12);
}

#[test]
fn transforms_are_unitary_and_mutually_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let s = random_state(&mut rng, n);
        let f = qft(&s);
        assert!((f.norm() - s.norm()).abs() < 1e-10);
        assert!(max_diff(&inverse_qft(&f), &s) < 1e-12);
        assert!(max_diff(&qft(&inverse_qft(&s)), &s) < 1e-12);
    }
}

#[test]
fn fast_transform_matches_reference_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let s = random_state(&mut rng, n);
        assert!(max_diff(&qft(&s), &qft_direct(&s)) < 1e-12);
        assert!(max_diff(&inverse_qft(&s), &inverse_qft_direct(&s)) < 1e-12);
    }
}

#[test]
fn simulation_matches_closed_form_and_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let w: f64 = rng.gen();
        let dist = outcome_distribution(n, w).unwrap();
        assert!((dist.total() - 1.0).abs() < 1e-10);
        for (x, &p) in dist.probs.iter().enumerate() {
            assert!((0.0..=1.0 + 1e-12).contains(&p));
            let cf = closed_form_prob(n, w, x as u64).unwrap();
            assert!((p - cf).abs() < 1e-9, "n = {n}, w = {w}, x = {x}");
        }
    }
    for _ in 0..10 {
        let n = rng.gen_range(1..=7);
        let w: f64 = rng.gen();
        let dist = outcome_distribution(n, w).unwrap();
        for (x, &p) in dist.probs.iter().enumerate() {
            assert!((p - brute_force_prob(n, w, x as u64)).abs() < 1e-10);
        }
    }
}

#[test]
fn phase_state_is_a_product_state() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=10 {
        let w: f64 = rng.gen();
        let s = phase_state(n, w).unwrap();
        let t = tensor_phase_state(n, w);
        for (a, &(re, im)) in s.amplitudes().iter().zip(&t) {
            assert!((a - Complex64::new(re, im)).norm_sqr().sqrt() < 1e-12);
        }
    }
}

#[test]
fn success_bound_holds_for_random_phases() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let bound = success_bound();
    for n in 1..=12 {
        for _ in 0..10_000 {
            let w = random_phase(&mut rng, n);
            let r = success_probability(n, w).unwrap();
            assert!(r.success_prob >= bound - 1e-12, "n = {n}, w = {w}");
            assert!(r.satisfied && r.x_hi.is_some());
        }
        for x in [0u64, 1, (1 << n) - 1] {
            let r = success_probability(n, x as f64 / (1u64 << n) as f64).unwrap();
            assert_eq!(r.success_prob, 1.0);
        }
    }
}

#[test]
fn midpoint_phase_approaches_bound() {
    let mut previous = f64::INFINITY;
    for n in 1..=12 {
        let w = 0.5 / (1u64 << n) as f64;
        let p = success_probability(n, w).unwrap().success_prob;
        assert!(p < previous, "n = {n}");
        previous = p;
    }
    assert!(previous - success_bound() < 1e-3);
    assert!(previous >= success_bound());
}

#[test]
fn corollary_links_outcomes_to_bound() {
    let bound = success_bound();
    for n in [1u32, 2, 5, 10] {
        let dim = (1u64 << n) as f64;
        for i in 1..1000 {
            let theta = i as f64 / 1000.0;
            let w = theta / dim;
            let pair = closed_form_prob(n, w, 0).unwrap() + closed_form_prob(n, w, 1).unwrap();
            let via_corollary = corollary_lhs(theta).unwrap() / (std::f64::consts::PI.powi(2));
            assert!(pair >= via_corollary - 1e-12, "n = {n}, theta = {theta}");
            assert!(via_corollary >= bound - 1e-12);
        }
    }
}
