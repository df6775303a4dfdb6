//! Search instances and pure-state Grover evolution.
//!
//! The iteration implemented here is `G = -I_0 I_y` with
//! `I_0 = 1 - 2|Psi_0><Psi_0|` (reflection about the uniform superposition)
//! and `I_y = 1 - 2|y><y|` (phase flip of the target). Starting from the
//! uniform state, `k` applications give exactly
//!
//! ```text
//! |Psi_k> = cos(theta_k)/sqrt(N-1) * sum_{x != y} |x> + sin(theta_k) |y>,
//! theta_k = (2k+1) theta_0,   sin(theta_0) = 1/sqrt(N)
//! ```
//!
//! with a positive sign, so the simulator and the closed form agree
//! amplitude by amplitude and not only up to global phase.

use crate::entanglement::QubitReducedState;
use crate::error::{Error, Result};

pub const MAX_INSTANCE_QUBITS: u32 = 30;
pub const MAX_SIMULATED_QUBITS: u32 = 24;

/// Normalization slack accepted on inputs (squared norm).
pub const NORM_TOLERANCE: f64 = 1e-10;

/// A single-target search problem over `N = 2^n` items.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchInstance {
    qubits: u32,
    size: u64,
    target: u64,
    theta0: f64,
}

impl SearchInstance {
    pub fn new(qubits: u32, target: u64) -> Result<Self> {
        if !(1..=MAX_INSTANCE_QUBITS).contains(&qubits) {
            return Err(Error::QubitsOutOfRange {
                qubits,
                min: 1,
                max: MAX_INSTANCE_QUBITS,
            });
        }
        let size = 1u64 << qubits;
        if target >= size {
            return Err(Error::TargetOutOfRange { target, size });
        }
        let theta0 = (1.0 / (size as f64).sqrt()).asin();
        Ok(Self {
            qubits,
            size,
            target,
            theta0,
        })
    }

    /// Instance with the all-ones target `2^n - 1`.
    pub fn with_default_target(qubits: u32) -> Result<Self> {
        if !(1..=MAX_INSTANCE_QUBITS).contains(&qubits) {
            return Err(Error::QubitsOutOfRange {
                qubits,
                min: 1,
                max: MAX_INSTANCE_QUBITS,
            });
        }
        Self::new(qubits, (1u64 << qubits) - 1)
    }

    pub fn qubits(&self) -> u32 {
        self.qubits
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    /// Rotation angle after `k` iterations, `(2k+1) theta_0`.
    pub fn theta(&self, k: u64) -> f64 {
        (2 * k + 1) as f64 * self.theta0
    }

    /// `ceil(pi / (4 theta_0))`, the iteration count around which the state
    /// first reaches the target.
    pub fn completion_iterations(&self) -> u64 {
        (std::f64::consts::PI / (4.0 * self.theta0)).ceil() as u64
    }

    /// Value of the target's bit for `qubit`.
    pub fn target_bit(&self, qubit: u32) -> bool {
        (self.target >> qubit) & 1 == 1
    }
}

/// The pure Grover state after `k` iterations, in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureSearchState {
    pub instance: SearchInstance,
    pub iteration: u64,
    pub theta: f64,
    /// Amplitude shared by every non-target basis state.
    pub off_target_amp: f64,
    pub target_amp: f64,
}

impl PureSearchState {
    pub fn closed_form(instance: &SearchInstance, k: u64) -> Self {
        let theta = instance.theta(k);
        let others = (instance.size() - 1) as f64;
        Self {
            instance: *instance,
            iteration: k,
            theta,
            off_target_amp: theta.cos() / others.sqrt(),
            target_amp: theta.sin(),
        }
    }

    /// Probability of measuring the target, `sin^2(theta_k)`.
    pub fn success_probability(&self) -> f64 {
        self.target_amp * self.target_amp
    }

    pub fn norm_sq(&self) -> f64 {
        let others = (self.instance.size() - 1) as f64;
        others * self.off_target_amp * self.off_target_amp + self.target_amp * self.target_amp
    }

    /// Dense amplitude vector of length `N`.
    pub fn amplitudes(&self) -> Result<Vec<f64>> {
        if self.instance.qubits() > MAX_SIMULATED_QUBITS {
            return Err(Error::QubitsOutOfRange {
                qubits: self.instance.qubits(),
                min: 1,
                max: MAX_SIMULATED_QUBITS,
            });
        }
        let mut amps = vec![self.off_target_amp; self.instance.size() as usize];
        amps[self.instance.target() as usize] = self.target_amp;
        Ok(amps)
    }
}

pub fn norm_sq(amplitudes: &[f64]) -> f64 {
    amplitudes.iter().map(|a| a * a).sum()
}

pub fn squared_overlap(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    dot * dot
}

fn check_state(amplitudes: &[f64], expected_len: usize) -> Result<()> {
    if amplitudes.len() != expected_len {
        return Err(Error::DimensionMismatch {
            expected: expected_len,
            actual: amplitudes.len(),
        });
    }
    let n2 = norm_sq(amplitudes);
    if (n2 - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm_sq: n2 });
    }
    Ok(())
}

/// Neumaier-compensated sum; the mean feeds back into every amplitude, so
/// plain summation error accumulates as norm drift over many iterations.
fn compensated_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

fn grover_step_in_place(amplitudes: &mut [f64], target: usize) {
    amplitudes[target] = -amplitudes[target];
    let mean = compensated_sum(amplitudes) / amplitudes.len() as f64;
    // -(1 - 2|u><u|) v = 2 <v>_mean - v
    for a in amplitudes.iter_mut() {
        *a = 2.0 * mean - *a;
    }
}

/// One application of `G = -I_0 I_y` to a normalized real state.
pub fn apply_grover_step(amplitudes: &[f64], instance: &SearchInstance) -> Result<Vec<f64>> {
    if instance.qubits() > MAX_SIMULATED_QUBITS {
        return Err(Error::QubitsOutOfRange {
            qubits: instance.qubits(),
            min: 1,
            max: MAX_SIMULATED_QUBITS,
        });
    }
    check_state(amplitudes, instance.size() as usize)?;
    let mut out = amplitudes.to_vec();
    grover_step_in_place(&mut out, instance.target() as usize);
    Ok(out)
}

/// Applies `k` Grover iterations to the uniform superposition.
pub fn simulate_statevector(instance: &SearchInstance, k: u64) -> Result<Vec<f64>> {
    if instance.qubits() > MAX_SIMULATED_QUBITS {
        return Err(Error::QubitsOutOfRange {
            qubits: instance.qubits(),
            min: 1,
            max: MAX_SIMULATED_QUBITS,
        });
    }
    let size = instance.size() as usize;
    let mut amps = vec![1.0 / (size as f64).sqrt(); size];
    for _ in 0..k {
        grover_step_in_place(&mut amps, instance.target() as usize);
    }
    Ok(amps)
}

/// Reduced density matrix of qubit `qubit`, tracing out every other qubit.
pub fn partial_trace_single_qubit(amplitudes: &[f64], qubit: u32) -> Result<QubitReducedState> {
    let len = amplitudes.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::DimensionMismatch {
            expected: len.next_power_of_two().max(2),
            actual: len,
        });
    }
    let qubits = len.trailing_zeros();
    if qubit >= qubits {
        return Err(Error::QubitIndexOutOfRange {
            index: qubit,
            qubits,
        });
    }
    check_state(amplitudes, len)?;

    let mask = 1usize << qubit;
    let (mut r00, mut r11, mut r01) = (0.0, 0.0, 0.0);
    for x in (0..len).filter(|x| x & mask == 0) {
        let a0 = amplitudes[x];
        let a1 = amplitudes[x | mask];
        r00 += a0 * a0;
        r11 += a1 * a1;
        r01 += a0 * a1;
    }
    Ok(QubitReducedState::from_matrix([[r00, r01], [r01, r11]]))
}
