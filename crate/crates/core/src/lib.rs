//! Grover search on pure and pseudo-pure states.
//!
//! The crate is split along the lines of the analysis:
//!
//! - [`grover`]: search instances, the closed-form Grover state and a
//!   brute-force real statevector simulator with single-qubit partial trace.
//! - [`entanglement`]: one-qubit-versus-rest diagnostics (Bloch vector,
//!   entropies, Hilbert-Schmidt distance, Schmidt product) and the purity
//!   bound below which a pseudo-pure Grover state is not proven entangled.
//! - [`pseudopure`]: the pseudo-pure ensemble, its success probability and
//!   the fluctuation calculus for traceless observables.
//! - [`complexity`]: classical and pseudo-pure expected query counts, the
//!   separability-constrained optimum and the speed-up/entanglement scan.
//!
//! Qubit `l` always refers to bit `l` of a basis-state label, with the least
//! significant bit being qubit 0.

pub mod complexity;
pub mod entanglement;
mod error;
pub mod grover;
pub mod pseudopure;

pub use complexity::{
    classical_queries, epsilon_speedup, max_separable_epsilon, pseudo_queries,
    speedup_entanglement_scan, table1, ComplexityRow, QueryCost, SpeedupScanRecord,
    SpeedupThreshold,
};
pub use entanglement::{
    bloch_vector, hs_distance, linear_entropy, schmidt_product, separability_bound,
    separability_profile, von_neumann_entropy, BlochVector, QubitReducedState, SeparabilityProfile,
};
pub use error::{Error, Result};
pub use grover::{
    apply_grover_step, partial_trace_single_qubit, simulate_statevector, PureSearchState,
    SearchInstance,
};
pub use pseudopure::{
    projector_deviation_variance, pseudo_variance, success_probability,
    traceless_expectation_scaling, FluctuationReport, PseudoPureEnsemble,
};
