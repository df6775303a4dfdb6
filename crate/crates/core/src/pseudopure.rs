//! Pseudo-pure ensembles `rho = (1-eps)/N * 1 + eps |Psi><Psi|`.
//!
//! Every quantity the search analysis needs depends only on `eps` and the
//! pure part, so the ensemble is kept implicit. Dense matrices are built
//! only for verification at small `N`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grover::{PureSearchState, SearchInstance, NORM_TOLERANCE};

/// Purity above which the pseudo-pure description of a thermal spin ensemble
/// is no longer a good approximation.
pub const DEFAULT_VALIDITY_THRESHOLD: f64 = 0.1;

/// Largest dimension for which dense matrices are materialized.
pub const MAX_DENSE_SIZE: u64 = 256;

const OPERATOR_TOLERANCE: f64 = 1e-10;

pub(crate) fn check_epsilon(epsilon: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    Ok(epsilon)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoPureEnsemble {
    pub epsilon: f64,
    pub pure_part: PureSearchState,
    pub validity_threshold: f64,
}

impl PseudoPureEnsemble {
    pub fn new(epsilon: f64, pure_part: PureSearchState) -> Result<Self> {
        Ok(Self {
            epsilon: check_epsilon(epsilon)?,
            pure_part,
            validity_threshold: DEFAULT_VALIDITY_THRESHOLD,
        })
    }

    pub fn with_validity_threshold(mut self, threshold: f64) -> Self {
        self.validity_threshold = threshold;
        self
    }

    /// Set when `epsilon` is too large for the pseudo-pure model to describe
    /// a physical spin ensemble. Computations are unaffected.
    pub fn exceeds_validity_threshold(&self) -> bool {
        self.epsilon > self.validity_threshold
    }

    pub fn size(&self) -> u64 {
        self.pure_part.instance.size()
    }

    /// `<x| rho |x>`.
    pub fn diagonal_entry(&self, x: u64) -> f64 {
        let amp = if x == self.pure_part.instance.target() {
            self.pure_part.target_amp
        } else {
            self.pure_part.off_target_amp
        };
        (1.0 - self.epsilon) / self.size() as f64 + self.epsilon * amp * amp
    }

    pub fn success_probability(&self) -> f64 {
        self.diagonal_entry(self.pure_part.instance.target())
    }

    /// Eigenvalues `((1-eps)/N, (1-eps)/N + eps)`; the first has
    /// multiplicity `N - 1`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mixed = (1.0 - self.epsilon) / self.size() as f64;
        (mixed, mixed + self.epsilon)
    }

    pub fn density_matrix(&self) -> Result<DMatrix<f64>> {
        let size = self.size();
        if size > MAX_DENSE_SIZE {
            return Err(Error::TooLargeToMaterialize {
                size,
                limit: MAX_DENSE_SIZE,
            });
        }
        let psi = DVector::from_vec(self.pure_part.amplitudes()?);
        let mixed = (1.0 - self.epsilon) / size as f64;
        Ok(DMatrix::identity(size as usize, size as usize) * mixed
            + &psi * psi.transpose() * self.epsilon)
    }
}

/// Probability of reading out the target after `k` iterations at purity
/// `epsilon`: `[1 + eps (N sin^2 theta_k - 1)] / N`.
pub fn success_probability(instance: &SearchInstance, k: u64, epsilon: f64) -> Result<f64> {
    let epsilon = check_epsilon(epsilon)?;
    let n = instance.size() as f64;
    let sin = instance.theta(k).sin();
    Ok((1.0 + epsilon * (n * sin * sin - 1.0)) / n)
}

/// Moments of a traceless observable on a pure state and on the matching
/// pseudo-pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluctuationReport {
    pub epsilon: f64,
    pub pure_variance: f64,
    pub pseudo_variance: f64,
    pub trace_theta_sq_over_n: f64,
    pub pure_expectation: f64,
}

fn validate(theta: &DMatrix<Complex64>, psi: &DVector<Complex64>) -> Result<()> {
    let dim = theta.nrows();
    if theta.ncols() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: theta.ncols(),
        });
    }
    if psi.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: psi.len(),
        });
    }
    if (theta - theta.adjoint())
        .iter()
        .any(|z| z.norm() > OPERATOR_TOLERANCE)
    {
        return Err(Error::NotHermitian);
    }
    let trace = theta.trace();
    if trace.norm() > OPERATOR_TOLERANCE {
        return Err(Error::NotTraceless(trace.re));
    }
    let norm_sq = psi.norm_squared();
    if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm_sq });
    }
    Ok(())
}

pub fn fluctuation_report(
    theta: &DMatrix<Complex64>,
    psi: &DVector<Complex64>,
    epsilon: f64,
) -> Result<FluctuationReport> {
    let epsilon = check_epsilon(epsilon)?;
    validate(theta, psi)?;
    let theta_psi = theta * psi;
    let pure_expectation = psi.dotc(&theta_psi).re;
    let second_moment = theta_psi.norm_squared();
    let pure_variance = (second_moment - pure_expectation * pure_expectation).max(0.0);
    // tr(Theta^2) is the squared Frobenius norm for Hermitian Theta
    let trace_theta_sq_over_n = theta.norm_squared() / theta.nrows() as f64;
    let pseudo_variance = epsilon * pure_variance
        + (1.0 - epsilon) * (trace_theta_sq_over_n + epsilon * pure_expectation * pure_expectation);
    Ok(FluctuationReport {
        epsilon,
        pure_variance,
        pseudo_variance,
        trace_theta_sq_over_n,
        pure_expectation,
    })
}

/// Variance of traceless `theta` on the pseudo-pure state with pure part
/// `psi`, from the pure-state moments.
pub fn pseudo_variance(
    theta: &DMatrix<Complex64>,
    psi: &DVector<Complex64>,
    epsilon: f64,
) -> Result<f64> {
    fluctuation_report(theta, psi, epsilon).map(|r| r.pseudo_variance)
}

/// `tr(rho theta) = eps <psi|theta|psi>` for traceless `theta`.
pub fn traceless_expectation_scaling(
    theta: &DMatrix<Complex64>,
    psi: &DVector<Complex64>,
    epsilon: f64,
) -> Result<f64> {
    let epsilon = check_epsilon(epsilon)?;
    validate(theta, psi)?;
    Ok(epsilon * psi.dotc(&(theta * psi)).re)
}

fn dense_pseudo_pure(psi: &DVector<Complex64>, epsilon: f64) -> Result<DMatrix<Complex64>> {
    let dim = psi.len();
    if dim as u64 > MAX_DENSE_SIZE {
        return Err(Error::TooLargeToMaterialize {
            size: dim as u64,
            limit: MAX_DENSE_SIZE,
        });
    }
    let mixed = Complex64::new((1.0 - epsilon) / dim as f64, 0.0);
    Ok(DMatrix::identity(dim, dim) * mixed + psi * psi.adjoint() * Complex64::new(epsilon, 0.0))
}

/// `tr(rho theta^2) - tr(rho theta)^2` by dense matrix arithmetic.
pub fn direct_variance(
    theta: &DMatrix<Complex64>,
    psi: &DVector<Complex64>,
    epsilon: f64,
) -> Result<f64> {
    let epsilon = check_epsilon(epsilon)?;
    validate(theta, psi)?;
    let rho = dense_pseudo_pure(psi, epsilon)?;
    let rho_theta = &rho * theta;
    let mean = rho_theta.trace().re;
    let second = (&rho_theta * theta).trace().re;
    Ok(second - mean * mean)
}

/// `tr(rho theta)` by dense matrix arithmetic.
pub fn direct_expectation(
    theta: &DMatrix<Complex64>,
    psi: &DVector<Complex64>,
    epsilon: f64,
) -> Result<f64> {
    let epsilon = check_epsilon(epsilon)?;
    validate(theta, psi)?;
    let rho = dense_pseudo_pure(psi, epsilon)?;
    Ok((&rho * theta).trace().re)
}

/// `P - 1/N` with `P = |psi><psi|`, the derivative of `rho` in `eps`.
pub fn projector_deviation_operator(psi: &DVector<Complex64>) -> DMatrix<Complex64> {
    let dim = psi.len();
    psi * psi.adjoint() - DMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0)
}

/// Pseudo-pure variance of `P - 1/N`:
/// `(1-eps)(1-1/N)[1/N + eps(1-1/N)]`. The pure-state variance is zero.
pub fn projector_deviation_variance(size: u64, epsilon: f64) -> Result<f64> {
    if size < 2 {
        return Err(Error::SizeTooSmall(size));
    }
    let epsilon = check_epsilon(epsilon)?;
    let inv = 1.0 / size as f64;
    Ok((1.0 - epsilon) * (1.0 - inv) * (inv + epsilon * (1.0 - inv)))
}

/// Complex copy of a closed-form Grover state, for use with the operator
/// routines above.
pub fn pure_state_vector(state: &PureSearchState) -> Result<DVector<Complex64>> {
    Ok(DVector::from_iterator(
        state.instance.size() as usize,
        state
            .amplitudes()?
            .into_iter()
            .map(|a| Complex64::new(a, 0.0)),
    ))
}
