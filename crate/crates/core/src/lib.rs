//! One-dimensional transient heat conduction in a rod.
//!
//! The solver advances `∂T/∂t = α ∂²T/∂x²` on a uniform grid with the
//! explicit forward-time, centred-space update
//!
//! ```text
//! T_i^{j+1} = T_i^j + λ (T_{i+1}^j − 2 T_i^j + T_{i−1}^j),   λ = α Δt / Δx²
//! ```
//!
//! with fixed-temperature (Dirichlet) or fixed-gradient (Neumann, ghost node)
//! ends. The [`oracle`] module provides closed-form references used to check
//! the stepping engine, [`io`] handles configuration files, CSV and SVG
//! output, and [`cli`] is the command-line front end.

pub mod boundary;
pub mod cli;
pub mod error;
pub mod field;
pub mod grid;
pub mod initial;
pub mod io;
pub mod material;
pub mod oracle;
pub mod simulate;
pub mod stability;
pub mod step;
pub mod verify;

pub use boundary::{BoundaryCondition, EndCondition};
pub use error::{HeatError, Location, Result};
pub use field::TemperatureField;
pub use grid::Grid1D;
pub use initial::{apply_initial_condition, InitialCondition};
pub use material::{builtin_material, thermal_diffusivity, Material, CATALOG_KEYS};
pub use simulate::{
    detect_steady_state, linear_steady_profile, simulate, SimulationResult, SolverConfig,
};
pub use stability::{check_stability, mesh_fourier_number, Stability};
pub use step::ftcs_step;
