//! Flat output records. Field names are the CSV headers and JSON keys.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Record {
    pub n: u32,
    #[serde(rename = "N")]
    pub size: u64,
    pub k_opt: u64,
    pub n_pseudo_min: f64,
    pub n_class: f64,
    pub epsilon_used: f64,
    pub speedup: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub n: u32,
    pub k: u64,
    pub theta_k: f64,
    pub s_x: f64,
    pub s_y: f64,
    pub s_z: f64,
    pub s: f64,
    pub von_neumann_entropy: f64,
    pub linear_entropy: f64,
    pub hs_distance: f64,
    pub schmidt_product: f64,
    pub epsilon_k: f64,
    pub cumulative_min_epsilon: f64,
    pub epsilon: f64,
    pub success_probability: f64,
    pub entangled: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub n: u32,
    pub k: u64,
    pub theta_k: f64,
    pub schmidt_product: f64,
    pub epsilon_k: f64,
    pub cumulative_min_epsilon: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: u32,
    #[serde(rename = "N")]
    pub size: u64,
    pub k_opt: u64,
    pub theta_k_opt: f64,
    pub epsilon_speedup: f64,
    /// Largest separability bound over `0 < k <= k_opt`.
    pub max_epsilon_k: f64,
    pub steps_checked: u64,
    pub steps_entangled: u64,
    pub entangled_throughout: bool,
    pub last_step_exception: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluctuationRecord {
    pub n: u32,
    #[serde(rename = "N")]
    pub size: u64,
    pub epsilon: f64,
    pub pure_expectation: f64,
    pub pure_variance: f64,
    pub trace_theta_sq_over_n: f64,
    pub pseudo_expectation: f64,
    pub pseudo_variance: f64,
    pub closed_form_variance: f64,
    pub direct_variance: f64,
    pub abs_difference: f64,
}

pub const TABLE1_HEADER: &str = "n,N,k_opt,n_pseudo_min,n_class,epsilon_used,speedup";
pub const TRACE_HEADER: &str = "n,k,theta_k,s_x,s_y,s_z,s,von_neumann_entropy,linear_entropy,hs_distance,schmidt_product,epsilon_k,cumulative_min_epsilon,epsilon,success_probability,entangled";
pub const BOUND_HEADER: &str = "n,k,theta_k,schmidt_product,epsilon_k,cumulative_min_epsilon";
pub const SCAN_HEADER: &str = "n,N,k_opt,theta_k_opt,epsilon_speedup,max_epsilon_k,steps_checked,steps_entangled,entangled_throughout,last_step_exception";
pub const FLUCTUATION_HEADER: &str = "n,N,epsilon,pure_expectation,pure_variance,trace_theta_sq_over_n,pseudo_expectation,pseudo_variance,closed_form_variance,direct_variance,abs_difference";
