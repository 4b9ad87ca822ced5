//! Closed-form references for checking the stepping engine.
//!
//! Two independent routes are provided: the exact solution of the fully
//! discrete recurrence (eigen-expansion of the interior second-difference
//! operator) and the continuum separated solution of the heat equation.

mod basis;
mod continuum;
mod convergence;
mod exact;
mod metrics;

pub use basis::DiscreteModeBasis;
pub use continuum::continuum_solution;
pub use convergence::{convergence_study, least_squares_slope, ConvergencePoint, ConvergenceStudy};
pub use exact::exact_ftcs_solution;
pub use metrics::{error_metrics, ErrorReport};
