//! Independent oracles shared by the integration tests. None of these touch
//! the library's transform or closed-form code paths.
#![allow(dead_code)]

use std::f64::consts::PI;

/// `|⟨x| QFT⁻¹ |ψₙ(w)⟩|²` by summing `2⁻ⁿ Σ_y e^{2πi(w − x/2ⁿ)y}` term by term
/// in plain real arithmetic.
pub fn brute_force_prob(n: u32, w: f64, x: u64) -> f64 {
    let dim = 1u64 << n;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for y in 0..dim {
        // (w·y − x·y/2ⁿ) mod 1 with the integer part taken exactly.
        let grid = ((x * y) % dim) as f64 / dim as f64;
        let turns = (w * y as f64).rem_euclid(1.0) - grid;
        let angle = 2.0 * PI * turns;
        re += angle.cos();
        im += angle.sin();
    }
    (re * re + im * im) / (dim as f64 * dim as f64)
}

/// `⊗_{j=0}^{n−1} (|0⟩ + e^{2πi·2^j·w}|1⟩)/√2`, with qubit j on bit j, as
/// (re, im) pairs.
pub fn tensor_phase_state(n: u32, w: f64) -> Vec<(f64, f64)> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut state = vec![(1.0f64, 0.0f64)];
    for j in 0..n {
        let angle = 2.0 * PI * (w * (1u64 << j) as f64).rem_euclid(1.0);
        let (c, sn) = (angle.cos(), angle.sin());
        let mut next = vec![(0.0, 0.0); state.len() * 2];
        let half = state.len();
        for (i, &(re, im)) in state.iter().enumerate() {
            next[i] = (re * s, im * s);
            next[i + half] = ((re * c - im * sn) * s, (re * sn + im * c) * s);
        }
        state = next;
    }
    state
}
