use grover_ent::complexity::{scan_record, table_row};
use grover_ent::entanglement::{bloch_vector_for_qubit, ENTANGLEMENT_MARGIN};
use grover_ent::pseudopure::{
    direct_variance, fluctuation_report, projector_deviation_operator, pure_state_vector,
};
use grover_ent::{
    hs_distance, linear_entropy, projector_deviation_variance, schmidt_product, separability_bound,
    success_probability, traceless_expectation_scaling, von_neumann_entropy, PureSearchState,
    QueryCost, SearchInstance,
};
use rayon::prelude::*;

use crate::error::CliError;
use crate::records::{BoundRecord, FluctuationRecord, ScanRecord, Table1Record, TraceRecord};

/// Tolerance for the identities the trace re-checks before emitting a row.
const INVARIANT_TOLERANCE: f64 = 1e-10;

pub fn cmd_table1(min: u32, max: u32, cost: QueryCost) -> Result<Vec<Table1Record>, CliError> {
    let rows = (min..=max)
        .into_par_iter()
        .map(|n| table_row(n, cost))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rows
        .into_iter()
        .map(|r| Table1Record {
            n: r.qubits,
            size: r.size,
            k_opt: r.k_opt,
            n_pseudo_min: r.quantum_queries,
            n_class: r.classical_queries,
            epsilon_used: r.epsilon_used,
            speedup: r.speedup,
        })
        .collect())
}

fn running_min(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut current = 1.0f64;
    values
        .map(|v| {
            current = current.min(v);
            current
        })
        .collect()
}

pub fn cmd_trace(qubits: u32, target: u64, epsilon: f64) -> Result<Vec<TraceRecord>, CliError> {
    let instance = SearchInstance::new(qubits, target)?;
    let ks: Vec<u64> = (0..=instance.completion_iterations()).collect();
    let bounds: Vec<f64> = ks
        .par_iter()
        .map(|&k| separability_bound(&instance, k))
        .collect();
    let cumulative = running_min(bounds.iter().copied());

    ks.par_iter()
        .map(|&k| {
            let idx = k as usize;
            let bloch = bloch_vector_for_qubit(&instance, k, 0)?;
            let s = bloch.norm();
            let l = linear_entropy(s)?;
            let d = hs_distance(s)?;
            if (d * d + l - 0.5).abs() > INVARIANT_TOLERANCE {
                return Err(CliError::Invariant(format!(
                    "d^2 + L = {} at k = {k}",
                    d * d + l
                )));
            }
            let epsilon_k = bounds[idx];
            Ok(TraceRecord {
                n: qubits,
                k,
                theta_k: instance.theta(k),
                s_x: bloch.x,
                s_y: bloch.y,
                s_z: bloch.z,
                s,
                von_neumann_entropy: von_neumann_entropy(s)?,
                linear_entropy: l,
                hs_distance: d,
                schmidt_product: schmidt_product(&instance, k),
                epsilon_k,
                cumulative_min_epsilon: cumulative[idx],
                epsilon,
                success_probability: success_probability(&instance, k, epsilon)?,
                entangled: epsilon > epsilon_k + ENTANGLEMENT_MARGIN,
            })
        })
        .collect()
}

pub fn cmd_bound(qubits: u32, target: u64) -> Result<Vec<BoundRecord>, CliError> {
    let instance = SearchInstance::new(qubits, target)?;
    let ks: Vec<u64> = (0..=instance.completion_iterations()).collect();
    let rows: Vec<(u64, f64, f64)> = ks
        .par_iter()
        .map(|&k| {
            (
                k,
                schmidt_product(&instance, k),
                separability_bound(&instance, k),
            )
        })
        .collect();
    let cumulative = running_min(rows.iter().map(|r| r.2));
    Ok(rows
        .into_iter()
        .zip(cumulative)
        .map(|((k, product, bound), min)| BoundRecord {
            n: qubits,
            k,
            theta_k: instance.theta(k),
            schmidt_product: product,
            epsilon_k: bound,
            cumulative_min_epsilon: min,
        })
        .collect())
}

pub fn cmd_scan(min: u32, max: u32) -> Result<Vec<ScanRecord>, CliError> {
    let records = (min..=max)
        .into_par_iter()
        .map(scan_record)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(records
        .into_iter()
        .map(|r| ScanRecord {
            n: r.qubits,
            size: r.size,
            k_opt: r.k_opt,
            theta_k_opt: r.theta_k_opt,
            epsilon_speedup: r.epsilon_speedup,
            max_epsilon_k: r.max_separability_bound().unwrap_or(1.0),
            steps_checked: r.checks.len() as u64,
            steps_entangled: r.checks.iter().filter(|c| c.entangled).count() as u64,
            entangled_throughout: r.entangled_throughout,
            last_step_exception: r.last_step_exception,
        })
        .collect())
}

/// One-line verdict on whether every scanned `n` needs entanglement after
/// every iteration, allowing an unentangled final step past `pi/2`.
pub fn scan_summary(records: &[ScanRecord]) -> String {
    let (Some(first), Some(last)) = (records.first(), records.last()) else {
        return "no qubit counts scanned".to_string();
    };
    let failing: Vec<String> = records
        .iter()
        .filter(|r| !r.entangled_throughout)
        .map(|r| r.n.to_string())
        .collect();
    let exceptions: Vec<String> = records
        .iter()
        .filter(|r| r.last_step_exception)
        .map(|r| r.n.to_string())
        .collect();
    let exceptions = if exceptions.is_empty() {
        "none".to_string()
    } else {
        exceptions.join(" ")
    };
    if failing.is_empty() {
        format!(
            "conclusion holds for n = {}..{}: speed-up requires entanglement after every iteration (last-step exceptions: {exceptions})",
            first.n, last.n
        )
    } else {
        format!(
            "conclusion fails for n = {}: speed-up possible with a separable intermediate state",
            failing.join(" ")
        )
    }
}

pub fn cmd_fluctuations(qubits: u32, epsilon: f64) -> Result<FluctuationRecord, CliError> {
    let instance = SearchInstance::with_default_target(qubits)?;
    let psi = pure_state_vector(&PureSearchState::closed_form(&instance, 0))?;
    let theta = projector_deviation_operator(&psi);
    let report = fluctuation_report(&theta, &psi, epsilon)?;
    let direct = direct_variance(&theta, &psi, epsilon)?;
    Ok(FluctuationRecord {
        n: qubits,
        size: instance.size(),
        epsilon,
        pure_expectation: report.pure_expectation,
        pure_variance: report.pure_variance,
        trace_theta_sq_over_n: report.trace_theta_sq_over_n,
        pseudo_expectation: traceless_expectation_scaling(&theta, &psi, epsilon)?,
        pseudo_variance: report.pseudo_variance,
        closed_form_variance: projector_deviation_variance(instance.size(), epsilon)?,
        direct_variance: direct,
        abs_difference: (report.pseudo_variance - direct).abs(),
    })
}
