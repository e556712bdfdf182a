//! Exact state-vector simulation of quantum phase estimation.
//!
//! Basis index `x = Σ_j x_j 2^j` identifies qubit `j` with bit `j`. The phase
//! register starts in
//!
//! ```text
//! |ψₙ(w)⟩ = 2^{−n/2} Σ_y e^{2πiwy} |y⟩ = ⊗_{j=0}^{n−1} (|0⟩ + e^{2πi·2^j·w}|1⟩)/√2
//! ```
//!
//! and the inverse QFT maps it to a distribution concentrated on the grid
//! points nearest to `w`. The same distribution has the closed form
//! `p(x) = sin²(π2ⁿΔ) / (2^{2n} sin²(πΔ))` with `Δ` the wrapped phase error;
//! [`outcome_distribution`] computes it by simulation and
//! [`closed_form_prob`] from the formula.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::inequality::success_bound;
use crate::trig::sin_pi;

/// Default cap on the register size: 2^24 amplitudes.
pub const DEFAULT_MAX_QUBITS: u32 = 24;

/// Norm tolerance for a valid state vector.
pub const NORM_TOL: f64 = 1e-10;

/// Slack on the success bound when deciding [`SuccessReport::satisfied`].
pub const BOUND_TOL: f64 = 1e-12;

// Below this |Δ| the closed form is replaced by its limit 1.
const ZERO_DELTA: f64 = 1e-15;

fn check_qubits(num_qubits: u32, max_qubits: u32) -> Result<usize> {
    if num_qubits == 0 {
        return Err(Error::domain("num_qubits", num_qubits, "num_qubits >= 1"));
    }
    if num_qubits > max_qubits {
        return Err(Error::Resource { num_qubits, max_qubits });
    }
    Ok(1usize << num_qubits)
}

/// Map a phase onto `[0, 1)`.
pub fn wrap_phase(w: f64) -> Result<f64> {
    if !w.is_finite() {
        return Err(Error::domain("phase", w, "finite phase"));
    }
    let r = w - libm::floor(w);
    Ok(if r >= 1.0 { 0.0 } else { r })
}

/// Fractional part of `w·y` in turns, with the product's rounding error
/// recovered by an FMA so large `y` keep full phase accuracy.
fn phase_turns(w: f64, y: u64) -> f64 {
    let y = y as f64;
    let hi = w * y;
    let lo = libm::fma(w, y, -hi);
    (hi - libm::floor(hi)) + lo
}

fn unit_phasor(turns: f64) -> Complex64 {
    let angle = 2.0 * PI * turns;
    Complex64::new(libm::cos(angle), libm::sin(angle))
}

/// Amplitudes of an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: u32,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wrap raw amplitudes. The length must be `2^num_qubits` and the norm 1
    /// within [`NORM_TOL`].
    pub fn from_amplitudes(num_qubits: u32, amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        if amplitudes.len() != dim {
            return Err(Error::domain(
                "amplitudes.len()",
                amplitudes.len() as f64,
                "2^num_qubits",
            ));
        }
        let state = StateVector { num_qubits, amplitudes };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain("norm", norm, "1 within 1e-10"));
        }
        Ok(state)
    }

    /// Computational basis state `|x⟩`.
    pub fn basis(num_qubits: u32, x: u64) -> Result<Self> {
        let dim = check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        if x >= dim as u64 {
            return Err(Error::domain("x", x as f64, "0 <= x < 2^n"));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[x as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amplitudes })
    }

    pub fn num_qubits(&self) -> u32 {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>())
    }

    /// `|amplitude|²` for every basis state.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// `|ψₙ(w)⟩` with the default amplitude budget.
pub fn phase_state(num_qubits: u32, w: f64) -> Result<StateVector> {
    phase_state_with_budget(num_qubits, w, DEFAULT_MAX_QUBITS)
}

pub fn phase_state_with_budget(num_qubits: u32, w: f64, max_qubits: u32) -> Result<StateVector> {
    let dim = check_qubits(num_qubits, max_qubits)?;
    let w = wrap_phase(w)?;
    let scale = 1.0 / libm::sqrt(dim as f64);
    let amplitudes = (0..dim as u64)
        .map(|y| unit_phasor(phase_turns(w, y)) * scale)
        .collect();
    Ok(StateVector { num_qubits, amplitudes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Inverse => -1.0,
        }
    }
}

/// `e^{±2πik/N}` for `k = 0..len`.
fn roots_of_unity(dim: usize, len: usize, dir: Direction) -> Vec<Complex64> {
    (0..len)
        .map(|k| unit_phasor(dir.sign() * (k as f64 / dim as f64)))
        .collect()
}

fn transform_direct(state: &StateVector, dir: Direction) -> StateVector {
    let dim = state.dim();
    let mask = dim as u64 - 1;
    let kernel = roots_of_unity(dim, dim, dir);
    let scale = 1.0 / libm::sqrt(dim as f64);
    let amplitudes = (0..dim as u64)
        .map(|x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (y, a) in state.amplitudes.iter().enumerate() {
                acc += kernel[(x.wrapping_mul(y as u64) & mask) as usize] * a;
            }
            acc * scale
        })
        .collect();
    StateVector {
        num_qubits: state.num_qubits,
        amplitudes,
    }
}

// Iterative radix-2 Cooley-Tukey, decimation in time.
fn transform_radix2(state: &StateVector, dir: Direction) -> StateVector {
    let dim = state.dim();
    let bits = state.num_qubits;
    let mut a = state.amplitudes.clone();
    if dim > 1 {
        for i in 0..dim {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if i < j {
                a.swap(i, j);
            }
        }
    }
    let twiddles = roots_of_unity(dim, dim / 2, dir);
    let mut half = 1;
    while half < dim {
        let stride = dim / (2 * half);
        for block in (0..dim).step_by(2 * half) {
            for k in 0..half {
                let t = twiddles[k * stride] * a[block + k + half];
                let u = a[block + k];
                a[block + k] = u + t;
                a[block + k + half] = u - t;
            }
        }
        half *= 2;
    }
    let scale = 1.0 / libm::sqrt(dim as f64);
    for v in a.iter_mut() {
        *v *= scale;
    }
    StateVector {
        num_qubits: state.num_qubits,
        amplitudes: a,
    }
}

/// Quantum Fourier transform, `|x⟩ ↦ |ψₙ(x/2ⁿ)⟩`, in O(n·2ⁿ).
pub fn qft(state: &StateVector) -> StateVector {
    transform_radix2(state, Direction::Forward)
}

/// Inverse quantum Fourier transform, `|x⟩ ↦ |ψₙ(−x/2ⁿ)⟩`, in O(n·2ⁿ).
pub fn inverse_qft(state: &StateVector) -> StateVector {
    transform_radix2(state, Direction::Inverse)
}

/// [`qft`] as the literal O(4ⁿ) double sum; the reference for the fast path.
pub fn qft_direct(state: &StateVector) -> StateVector {
    transform_direct(state, Direction::Forward)
}

/// [`inverse_qft`] as the literal O(4ⁿ) double sum.
pub fn inverse_qft_direct(state: &StateVector) -> StateVector {
    transform_direct(state, Direction::Inverse)
}

fn check_outcome(num_qubits: u32, x: u64) -> Result<u64> {
    if num_qubits == 0 || num_qubits > 62 {
        return Err(Error::domain("num_qubits", num_qubits, "1 <= num_qubits <= 62"));
    }
    let dim = 1u64 << num_qubits;
    if x >= dim {
        return Err(Error::domain("x", x as f64, "0 <= x < 2^n"));
    }
    Ok(dim)
}

/// Wrapped phase error: the representative of `w − x/2ⁿ (mod 1)` in
/// `(−1/2, 1/2]`. An exact tie at distance 1/2 resolves to `+1/2`.
pub fn delta(w: f64, num_qubits: u32, x: u64) -> Result<f64> {
    let dim = check_outcome(num_qubits, x)?;
    if !w.is_finite() {
        return Err(Error::domain("phase", w, "finite phase"));
    }
    let r = w - x as f64 / dim as f64;
    Ok(r - libm::ceil(r - 0.5))
}

/// `p(x) = (sin(π2ⁿΔ) / (2ⁿ sin(πΔ)))²`, equal to 1 when `Δ = 0`.
pub fn closed_form_prob(num_qubits: u32, w: f64, x: u64) -> Result<f64> {
    let d = delta(w, num_qubits, x)?;
    if d.abs() < ZERO_DELTA {
        return Ok(1.0);
    }
    let dim = libm::exp2(f64::from(num_qubits));
    let den = dim * sin_pi(d);
    if den == 0.0 {
        return Ok(1.0);
    }
    let ratio = sin_pi(dim * d) / den;
    Ok(ratio * ratio)
}

/// Measurement statistics of `QFT⁻¹|ψₙ(w)⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    pub num_qubits: u32,
    /// Phase wrapped onto `[0, 1)`.
    pub phase_w: f64,
    pub probs: Vec<f64>,
}

impl OutcomeDistribution {
    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

/// Simulated outcome distribution: `|⟨x| QFT⁻¹ |ψₙ(w)⟩|²` for every `x`.
pub fn outcome_distribution(num_qubits: u32, w: f64) -> Result<OutcomeDistribution> {
    let phase_w = wrap_phase(w)?;
    let state = phase_state(num_qubits, phase_w)?;
    Ok(OutcomeDistribution {
        num_qubits,
        phase_w,
        probs: inverse_qft(&state).probabilities(),
    })
}

/// Probability that the measured `x` satisfies `|Δ(w, n, x)| < 2⁻ⁿ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuccessReport {
    pub phase_w: f64,
    pub num_qubits: u32,
    pub x_lo: u64,
    /// Second grid point; `None` when `2ⁿw` is an integer.
    pub x_hi: Option<u64>,
    pub p_lo: f64,
    pub p_hi: Option<f64>,
    pub success_prob: f64,
    pub bound: f64,
    pub satisfied: bool,
}

/// The grid points within `2⁻ⁿ` of `w`: `⌊2ⁿw⌋` and, unless `2ⁿw` is an
/// integer, its successor modulo `2ⁿ`.
pub fn nearest_outcomes(num_qubits: u32, w: f64) -> Result<(u64, Option<u64>)> {
    let dim = check_outcome(num_qubits, 0)?;
    let w = wrap_phase(w)?;
    // Scaling by a power of two is exact.
    let scaled = w * dim as f64;
    let lo = libm::floor(scaled);
    let x_lo = lo as u64;
    let x_hi = (scaled != lo).then_some((x_lo + 1) % dim);
    Ok((x_lo, x_hi))
}

fn report(num_qubits: u32, phase_w: f64, x_lo: u64, x_hi: Option<u64>, p_lo: f64, p_hi: Option<f64>) -> SuccessReport {
    let success_prob = p_lo + p_hi.unwrap_or(0.0);
    let bound = success_bound();
    SuccessReport {
        phase_w,
        num_qubits,
        x_lo,
        x_hi,
        p_lo,
        p_hi,
        success_prob,
        bound,
        satisfied: success_prob >= bound - BOUND_TOL,
    }
}

/// Success probability from the closed-form outcome probabilities.
pub fn success_probability(num_qubits: u32, w: f64) -> Result<SuccessReport> {
    let phase_w = wrap_phase(w)?;
    let (x_lo, x_hi) = nearest_outcomes(num_qubits, phase_w)?;
    let p_lo = closed_form_prob(num_qubits, phase_w, x_lo)?;
    let p_hi = x_hi.map(|x| closed_form_prob(num_qubits, phase_w, x)).transpose()?;
    Ok(report(num_qubits, phase_w, x_lo, x_hi, p_lo, p_hi))
}

impl SuccessReport {
    /// Success probability read off a simulated distribution.
    pub fn from_distribution(dist: &OutcomeDistribution) -> Result<SuccessReport> {
        let (x_lo, x_hi) = nearest_outcomes(dist.num_qubits, dist.phase_w)?;
        let p_lo = dist.probs[x_lo as usize];
        let p_hi = x_hi.map(|x| dist.probs[x as usize]);
        Ok(report(dist.num_qubits, dist.phase_w, x_lo, x_hi, p_lo, p_hi))
    }
}
