//! Numerical oracle: adaptive Dormand–Prince 5(4) integration of the
//! classical spin equation `S′ = h(τ) × S` and of the two-level
//! Schrödinger equation, plus numeric propagators and monodromies.

mod classical;
mod dopri;
mod quantum;

pub use classical::{
    integrate_classical, integrate_classical_at, monodromy_numeric, monodromy_numeric_tol,
    propagator, Trajectory,
};
pub use dopri::{integrate, DenseSolution, IntegrationStats};
pub use quantum::{
    fit_quantum_monodromy, integrate_schrodinger, integrate_schrodinger_at, projector_bloch,
    quantum_monodromy, QuantumState, QuantumTrajectory, Unitary2,
};

use thiserror::Error;

/// Default integration tolerance.
pub const DEFAULT_TOL: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumintError {
    #[error("tolerance {0} outside (1e-14, 1e-3)")]
    InvalidTolerance(f64),
    #[error("step size underflow at t = {0}")]
    StepUnderflow(f64),
    #[error("state not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("non-finite value encountered at t = {0}")]
    NonFinite(f64),
}

pub(crate) fn check_tol(tol: f64) -> Result<(), NumintError> {
    if tol > 1e-14 && tol < 1e-3 {
        Ok(())
    } else {
        Err(NumintError::InvalidTolerance(tol))
    }
}
