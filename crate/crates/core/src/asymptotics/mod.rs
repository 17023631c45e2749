//! Bias constants, Tauberian main terms and numeric convergence checks.
//!
//! Symmetric-class results need `1 <= a < m/2`, hence `m >= 3`.

pub mod boundary;
pub mod convergence;
pub mod digamma;
pub mod tauberian;

pub use boundary::{boundary_check, closed_form, BoundaryReport, BoundaryRow};
pub use convergence::{convergence_report, flavor_total, ConvergenceReport, ConvergenceRow};
pub use digamma::{bias_constant, digamma, digamma_diff, BiasConstant};
pub use tauberian::{
    tauberian_log_predict, tauberian_predict, AsymptoticProfile, ClassicalTerm, LogMagnitude,
};
