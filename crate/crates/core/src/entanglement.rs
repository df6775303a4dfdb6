//! One-qubit-versus-rest entanglement of Grover states.
//!
//! For the pure state `|Psi_k>` every single qubit has the same reduced
//! state up to a relabeling of its basis, so the diagnostics here are
//! functions of the Bloch length `s(k)` alone. The pseudo-pure state
//! `(1-eps)/N + eps |Psi_k><Psi_k|` is entangled whenever
//! `eps > 1 / (1 + N sqrt(lambda1 lambda2))`, where `lambda1 lambda2` is the
//! Schmidt coefficient product of `|Psi_k>` across the same cut.

use crate::error::{Error, Result};
use crate::grover::{partial_trace_single_qubit, SearchInstance};

/// Round-off slack for Bloch lengths and eigenvalues.
pub const CLAMP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// A single qubit's reduced density matrix.
///
/// Grover amplitudes are real, so the matrix is real symmetric and the
/// Bloch vector always has `y = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitReducedState {
    pub matrix: [[f64; 2]; 2],
    pub bloch: BlochVector,
    /// Larger eigenvalue.
    pub lambda1: f64,
    pub lambda2: f64,
}

impl QubitReducedState {
    pub fn from_matrix(matrix: [[f64; 2]; 2]) -> Self {
        let [[a, b], [_, d]] = matrix;
        let bloch = BlochVector {
            x: 2.0 * b,
            y: 0.0,
            z: a - d,
        };
        let trace = a + d;
        let gap = ((a - d) * (a - d) + 4.0 * b * b).sqrt();
        let lambda1 = ((trace + gap) / 2.0).clamp(0.0, 1.0);
        // the determinant keeps lambda2 accurate when the state is nearly pure
        let det = (a * d - b * b).max(0.0);
        let lambda2 = if lambda1 > 0.0 {
            (det / lambda1).clamp(0.0, 1.0)
        } else {
            0.0
        };
        Self {
            matrix,
            bloch,
            lambda1,
            lambda2,
        }
    }

    /// `(1 + s . sigma) / 2`.
    pub fn from_bloch(bloch: BlochVector) -> Self {
        let matrix = [
            [(1.0 + bloch.z) / 2.0, bloch.x / 2.0],
            [bloch.x / 2.0, (1.0 - bloch.z) / 2.0],
        ];
        let mut state = Self::from_matrix(matrix);
        state.bloch = bloch;
        state
    }

    pub fn bloch_length(&self) -> f64 {
        self.bloch.norm()
    }

    pub fn eigenvalue_product(&self) -> f64 {
        self.lambda1 * self.lambda2
    }

    /// Orthonormal eigenvectors for `(lambda1, lambda2)`.
    pub fn eigenvectors(&self) -> ([f64; 2], [f64; 2]) {
        let [[a, b], [_, d]] = self.matrix;
        let phi = 0.5 * (2.0 * b).atan2(a - d);
        let (s, c) = phi.sin_cos();
        ([c, s], [-s, c])
    }
}

/// Bloch vector of any qubit whose target bit is 1, after `k` iterations.
pub fn bloch_vector(instance: &SearchInstance, k: u64) -> BlochVector {
    let n = instance.size() as f64;
    let theta = instance.theta(k);
    let (sin, cos) = theta.sin_cos();
    BlochVector {
        x: (n - 2.0) / (n - 1.0) * cos * cos + (2.0 * theta).sin() / (n - 1.0).sqrt(),
        y: 0.0,
        z: cos * cos / (n - 1.0) - sin * sin,
    }
}

/// Bloch vector of `qubit` for the actual target of `instance`. A target bit
/// of 0 swaps the qubit's basis states, which flips the sign of `z`.
pub fn bloch_vector_for_qubit(
    instance: &SearchInstance,
    k: u64,
    qubit: u32,
) -> Result<BlochVector> {
    if qubit >= instance.qubits() {
        return Err(Error::QubitIndexOutOfRange {
            index: qubit,
            qubits: instance.qubits(),
        });
    }
    let mut s = bloch_vector(instance, k);
    if !instance.target_bit(qubit) {
        s.z = -s.z;
    }
    Ok(s)
}

/// Analytic reduced state of `qubit` after `k` iterations.
pub fn reduced_state(instance: &SearchInstance, k: u64, qubit: u32) -> Result<QubitReducedState> {
    bloch_vector_for_qubit(instance, k, qubit).map(QubitReducedState::from_bloch)
}

fn check_bloch_length(s: f64) -> Result<f64> {
    if s.is_nan() || !(-CLAMP_TOLERANCE..=1.0 + CLAMP_TOLERANCE).contains(&s) {
        return Err(Error::BlochLengthOutOfRange(s));
    }
    Ok(s.clamp(0.0, 1.0))
}

fn x_log2_x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Von Neumann entropy in bits of a qubit with Bloch length `s`.
pub fn von_neumann_entropy(s: f64) -> Result<f64> {
    let s = check_bloch_length(s)?;
    let minus = 1.0 - s;
    let plus = 1.0 + s;
    // (1-s)/2 log2(1-s) = x_log2_x(1-s) / 2
    let h = 1.0 - x_log2_x(minus) / 2.0 - x_log2_x(plus) / 2.0;
    Ok(h.clamp(0.0, 1.0))
}

/// `tr(rho - rho^2) = (1 - s^2) / 2`.
pub fn linear_entropy(s: f64) -> Result<f64> {
    let s = check_bloch_length(s)?;
    Ok((1.0 - s * s) / 2.0)
}

/// Hilbert-Schmidt distance to the maximally mixed qubit, `s / sqrt(2)`.
pub fn hs_distance(s: f64) -> Result<f64> {
    let s = check_bloch_length(s)?;
    Ok(s * std::f64::consts::FRAC_1_SQRT_2)
}

/// Schmidt coefficient product `lambda1 lambda2` of `|Psi_k>` across any
/// one-qubit cut.
pub fn schmidt_product(instance: &SearchInstance, k: u64) -> f64 {
    let n = instance.size() as f64;
    let prefactor = n * (n - 2.0) / (2.0 * (n - 1.0) * (n - 1.0));
    let spread = (2.0 * k as f64 * instance.theta0()).sin();
    let cos = instance.theta(k).cos();
    prefactor * spread * spread * cos * cos
}

/// Largest purity for which the fidelity criterion does not detect
/// entanglement, given the Schmidt product of the pure part.
pub fn bound_from_schmidt_product(size: u64, product: f64) -> f64 {
    1.0 / (1.0 + size as f64 * product.max(0.0).sqrt())
}

/// `eps_k`: the pseudo-pure state at step `k` is entangled for any
/// `eps > eps_k`.
pub fn separability_bound(instance: &SearchInstance, k: u64) -> f64 {
    bound_from_schmidt_product(instance.size(), schmidt_product(instance, k))
}

/// Margin `epsilon` must clear above `eps_k` before entanglement is claimed,
/// so a bound that rounds just below 1 at exact completion certifies nothing.
pub const ENTANGLEMENT_MARGIN: f64 = 1e-12;

/// Whether the bound at step `k` certifies entanglement at purity `epsilon`.
pub fn proven_entangled(instance: &SearchInstance, k: u64, epsilon: f64) -> bool {
    epsilon > separability_bound(instance, k) + ENTANGLEMENT_MARGIN
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityProfile {
    pub per_iteration_bounds: Vec<(u64, f64)>,
    /// Running `min_{j <= k} eps_j`.
    pub cumulative_min: Vec<(u64, f64)>,
}

impl SeparabilityProfile {
    pub fn final_min(&self) -> f64 {
        self.cumulative_min.last().map_or(1.0, |&(_, e)| e)
    }
}

pub fn separability_profile(instance: &SearchInstance, k_max: u64) -> SeparabilityProfile {
    let per_iteration_bounds: Vec<(u64, f64)> = (0..=k_max)
        .map(|k| (k, separability_bound(instance, k)))
        .collect();
    let mut running = 1.0f64;
    let cumulative_min = per_iteration_bounds
        .iter()
        .map(|&(k, e)| {
            running = running.min(e);
            (k, running)
        })
        .collect();
    SeparabilityProfile {
        per_iteration_bounds,
        cumulative_min,
    }
}

/// Contracts `qubit` of `amplitudes` against the single-qubit vector `u`,
/// leaving a vector on the remaining qubits.
fn contract_qubit(amplitudes: &[f64], qubit: u32, u: [f64; 2]) -> Vec<f64> {
    let mask = 1usize << qubit;
    let low = mask - 1;
    (0..amplitudes.len() / 2)
        .map(|r| {
            let x0 = ((r & !low) << 1) | (r & low);
            u[0] * amplitudes[x0] + u[1] * amplitudes[x0 | mask]
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalized(v: &[f64]) -> Vec<f64> {
    let n = dot(v, v).sqrt();
    v.iter().map(|x| x / n).collect()
}

/// Unit vector orthogonal to `v` (which must be a unit vector of length >= 2).
fn orthogonal_unit(v: &[f64]) -> Vec<f64> {
    let (pick, _) = v
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .expect("non-empty");
    let mut w: Vec<f64> = v.iter().map(|x| -v[pick] * x).collect();
    w[pick] += 1.0;
    normalized(&w)
}

/// Singlet fidelity of the pseudo-pure state built on `amplitudes`, after
/// projecting onto the four-dimensional span of its Schmidt vectors across
/// the cut `qubit | rest`.
///
/// The projected state is separable iff the returned value is at most 1/2.
/// Everything is computed from the numerical Schmidt decomposition of the
/// given state, so this serves as an independent check on
/// [`separability_bound`].
pub fn projected_singlet_fidelity(amplitudes: &[f64], qubit: u32, epsilon: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    let reduced = partial_trace_single_qubit(amplitudes, qubit)?;
    if amplitudes.len() < 4 {
        return Err(Error::QubitsOutOfRange {
            qubits: 1,
            min: 2,
            max: crate::grover::MAX_SIMULATED_QUBITS,
        });
    }
    let size = amplitudes.len() as f64;
    let (e, g) = reduced.eigenvectors();

    let phi_e = contract_qubit(amplitudes, qubit, e);
    let phi_g = contract_qubit(amplitudes, qubit, g);
    let g_rest = normalized(&phi_e);
    let e_rest = if dot(&phi_g, &phi_g) > 1e-24 {
        normalized(&phi_g).iter().map(|x| -x).collect()
    } else {
        orthogonal_unit(&g_rest)
    };

    // <A (x) b | psi> = <A | contract(psi, b)>
    let overlap = |rest: &[f64], single: &[f64]| dot(rest, single);
    let amp_ge = overlap(&g_rest, &phi_e);
    let amp_gg = overlap(&g_rest, &phi_g);
    let amp_ee = overlap(&e_rest, &phi_e);
    let amp_eg = overlap(&e_rest, &phi_g);

    let mixed = (1.0 - epsilon) / size;
    let diag = |amp: f64| mixed + epsilon * amp * amp;
    let trace = diag(amp_ge) + diag(amp_gg) + diag(amp_ee) + diag(amp_eg);
    let singlet_amp = (amp_ge - amp_eg) * std::f64::consts::FRAC_1_SQRT_2;
    Ok(diag(singlet_amp) / trace)
}
