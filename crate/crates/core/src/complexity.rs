//! Expected query counts for classical and pseudo-pure search.
//!
//! A pseudo-pure run of `k` Grover iterations followed by one test query
//! succeeds with probability `p(k, eps)`; repeating until success costs
//! `(k + 1) / p(k, eps)` oracle calls on average. Systematic classical
//! search over `N` items needs `(N + 2)(N - 1) / (2N)` calls on average.

use std::f64::consts::FRAC_PI_2;

use crate::entanglement::separability_bound;
use crate::error::{Error, Result};
use crate::grover::{SearchInstance, MAX_INSTANCE_QUBITS};
use crate::pseudopure::{check_epsilon, success_probability};

/// Relative slack used when comparing expected query counts, so that
/// round-off does not decide ties.
const TIE_TOLERANCE: f64 = 1e-12;

pub const MAX_SCAN_QUBITS: u32 = 20;

/// Expected oracle calls for systematic classical search over `size` items,
/// inferring the last location without querying it.
pub fn classical_queries(size: u64) -> Result<f64> {
    if size < 2 {
        return Err(Error::SizeTooSmall(size));
    }
    let n = size as f64;
    Ok((n + 2.0) * (n - 1.0) / (2.0 * n))
}

/// How a repeat-until-success run is charged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryCost {
    /// Charge one extra oracle call per run to test the readout. When
    /// disabled, the test is dropped only for runs that succeed with
    /// certainty; any other run still needs it to know when to stop.
    pub include_final_test: bool,
}

impl Default for QueryCost {
    fn default() -> Self {
        Self {
            include_final_test: true,
        }
    }
}

impl QueryCost {
    pub fn expected_queries(&self, k: u64, probability: f64) -> f64 {
        let certain = (probability - 1.0).abs() <= TIE_TOLERANCE;
        let test = if self.include_final_test || !certain {
            1.0
        } else {
            0.0
        };
        (k as f64 + test) / probability
    }
}

/// Upper end of the iteration range searched when optimizing over `k`:
/// `ceil(pi / (4 theta_0)) + 2`.
pub fn iteration_limit(instance: &SearchInstance) -> u64 {
    instance.completion_iterations() + 2
}

fn is_better(candidate: f64, best: f64) -> bool {
    candidate < best * (1.0 - TIE_TOLERANCE)
}

/// Optimal `(k, expected queries)` over `k in [0, k_max]` at fixed purity.
/// Ties go to the smaller `k`.
pub fn pseudo_queries(instance: &SearchInstance, epsilon: f64, k_max: u64) -> Result<(u64, f64)> {
    pseudo_queries_with_cost(instance, epsilon, k_max, QueryCost::default())
}

pub fn pseudo_queries_with_cost(
    instance: &SearchInstance,
    epsilon: f64,
    k_max: u64,
    cost: QueryCost,
) -> Result<(u64, f64)> {
    let epsilon = check_epsilon(epsilon)?;
    let mut best = (0, f64::INFINITY);
    for k in 0..=k_max {
        let q = cost.expected_queries(k, success_probability(instance, k, epsilon)?);
        if is_better(q, best.1) {
            best = (k, q);
        }
    }
    Ok(best)
}

/// Largest purity keeping every state up to step `k` free of certified
/// entanglement: `min_{j <= k} eps_j`.
pub fn max_separable_epsilon(instance: &SearchInstance, k: u64) -> f64 {
    (0..=k)
        .map(|j| separability_bound(instance, j))
        .fold(1.0, f64::min)
}

/// One row of the separability-constrained complexity table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexityRow {
    pub qubits: u32,
    pub size: u64,
    pub k_opt: u64,
    pub quantum_queries: f64,
    pub classical_queries: f64,
    pub epsilon_used: f64,
    pub speedup: bool,
}

/// Best expected query count of a pseudo-pure machine whose purity never
/// exceeds the separability bound of any state it passes through.
pub fn table_row(qubits: u32, cost: QueryCost) -> Result<ComplexityRow> {
    let instance = SearchInstance::with_default_target(qubits)?;
    let classical = classical_queries(instance.size())?;
    let mut running_eps = 1.0f64;
    let mut best = (0, f64::INFINITY, 1.0);
    for k in 0..=iteration_limit(&instance) {
        running_eps = running_eps.min(separability_bound(&instance, k));
        let q = cost.expected_queries(k, success_probability(&instance, k, running_eps)?);
        if is_better(q, best.1) {
            best = (k, q, running_eps);
        }
    }
    let (k_opt, quantum_queries, epsilon_used) = best;
    Ok(ComplexityRow {
        qubits,
        size: instance.size(),
        k_opt,
        quantum_queries,
        classical_queries: classical,
        epsilon_used,
        speedup: quantum_queries < classical,
    })
}

fn check_qubit_range(min: u32, max: u32, lowest: u32, highest: u32) -> Result<()> {
    if min < lowest {
        return Err(Error::InvalidRange {
            min,
            max,
            reason: "minimum below supported range",
        });
    }
    if max > highest {
        return Err(Error::InvalidRange {
            min,
            max,
            reason: "maximum above supported range",
        });
    }
    if min > max {
        return Err(Error::InvalidRange {
            min,
            max,
            reason: "minimum exceeds maximum",
        });
    }
    Ok(())
}

pub fn table1(n_min: u32, n_max: u32) -> Result<Vec<ComplexityRow>> {
    table1_with_cost(n_min, n_max, QueryCost::default())
}

pub fn table1_with_cost(n_min: u32, n_max: u32, cost: QueryCost) -> Result<Vec<ComplexityRow>> {
    check_qubit_range(n_min, n_max, 1, MAX_INSTANCE_QUBITS)?;
    (n_min..=n_max).map(|n| table_row(n, cost)).collect()
}

/// Lowest purity at which the optimized pseudo-pure search beats classical
/// search; speed-up holds for every `eps` strictly above `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedupThreshold {
    /// Iteration count that reaches the classical cost first.
    pub k_opt: u64,
    pub epsilon: f64,
}

/// Because `p(k, eps)` is affine in `eps`, each `k` has its own threshold
/// `(N (k+1) / N_class - 1) / (N sin^2 theta_k - 1)`; the answer is the
/// smallest of these that lies below 1. `None` when even `eps = 1` gives
/// no speed-up.
pub fn epsilon_speedup(instance: &SearchInstance) -> Option<SpeedupThreshold> {
    let classical = classical_queries(instance.size()).ok()?;
    let n = instance.size() as f64;
    let mut best: Option<SpeedupThreshold> = None;
    for k in 0..=iteration_limit(instance) {
        let sin = instance.theta(k).sin();
        let slope = n * sin * sin - 1.0;
        if slope <= 0.0 {
            continue;
        }
        let needed = ((n * (k + 1) as f64 / classical - 1.0) / slope).max(0.0);
        if needed >= 1.0 {
            continue;
        }
        if best.is_none_or(|b| needed < b.epsilon * (1.0 - TIE_TOLERANCE)) {
            best = Some(SpeedupThreshold {
                k_opt: k,
                epsilon: needed,
            });
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationCheck {
    pub k: u64,
    pub separability_bound: f64,
    /// `eps_speedup > eps_k`: any machine fast enough to beat classical
    /// search is entangled after this iteration.
    pub entangled: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeedupScanRecord {
    pub qubits: u32,
    pub size: u64,
    pub k_opt: u64,
    pub theta_k_opt: f64,
    pub epsilon_speedup: f64,
    /// Checks for `0 < k <= k_opt`.
    pub checks: Vec<IterationCheck>,
    pub entangled_throughout: bool,
    /// The final step overshoots `pi/2` and is not certified entangled.
    pub last_step_exception: bool,
}

impl SpeedupScanRecord {
    pub fn max_separability_bound(&self) -> Option<f64> {
        self.checks
            .iter()
            .map(|c| c.separability_bound)
            .reduce(f64::max)
    }
}

pub fn scan_record(qubits: u32) -> Result<SpeedupScanRecord> {
    let instance = SearchInstance::with_default_target(qubits)?;
    let threshold = epsilon_speedup(&instance).ok_or(Error::NoSpeedup { qubits })?;
    let k_opt = threshold.k_opt;
    let checks: Vec<IterationCheck> = (1..=k_opt)
        .map(|k| {
            let bound = separability_bound(&instance, k);
            IterationCheck {
                k,
                separability_bound: bound,
                entangled: threshold.epsilon > bound,
            }
        })
        .collect();

    let theta_k_opt = instance.theta(k_opt);
    let final_entangled = checks.last().is_none_or(|c| c.entangled);
    let last_step_exception = theta_k_opt > FRAC_PI_2 && !final_entangled;
    let before_last_entangled = checks
        .iter()
        .take(checks.len().saturating_sub(1))
        .all(|c| c.entangled);
    Ok(SpeedupScanRecord {
        qubits,
        size: instance.size(),
        k_opt,
        theta_k_opt,
        epsilon_speedup: threshold.epsilon,
        checks,
        entangled_throughout: before_last_entangled && (final_entangled || last_step_exception),
        last_step_exception,
    })
}

/// Compares the speed-up purity threshold with the separability bound after
/// every iteration, for each `n` in `[n_min, n_max]`.
pub fn speedup_entanglement_scan(n_min: u32, n_max: u32) -> Result<Vec<SpeedupScanRecord>> {
    check_qubit_range(n_min, n_max, 3, MAX_SCAN_QUBITS)?;
    (n_min..=n_max).map(scan_record).collect()
}
