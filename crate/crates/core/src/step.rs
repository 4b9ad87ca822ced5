//! One explicit update of the temperature field.
//!
//! Interior nodes use `T_i + λ (T_{i+1} − 2T_i + T_{i−1})`. A Dirichlet end
//! is overwritten with its value. A Neumann end with gradient `g` gets a
//! ghost node (`T_{−1} = T_1 − 2Δx g` on the left, `T_N = T_{N−2} + 2Δx g`
//! on the right) and then takes the interior update.

use crate::boundary::{BoundaryCondition, EndCondition};
use crate::error::{HeatError, Result};
use crate::field::TemperatureField;

/// Advances `field` by one step of length `dt`.
///
/// Non-finite input is not an error: the result carries `diverged = true`.
pub fn ftcs_step(
    field: &TemperatureField,
    lambda: f64,
    bc: &BoundaryCondition,
    dx: f64,
    dt: f64,
) -> Result<TemperatureField> {
    if field.len() < 3 {
        return Err(HeatError::Config(format!(
            "field needs at least 3 nodes, got {}",
            field.len()
        )));
    }
    let mut next = vec![0.0; field.len()];
    step_into(&field.values, &mut next, lambda, bc, dx);
    let mut out = TemperatureField::new(next, field.time + dt);
    out.diverged |= field.diverged;
    Ok(out)
}

/// Writes the update of `cur` into `next`. Both slices have length `>= 3`.
pub(crate) fn step_into(
    cur: &[f64],
    next: &mut [f64],
    lambda: f64,
    bc: &BoundaryCondition,
    dx: f64,
) {
    // neighbours are summed first so mirrored nodes round identically
    let n = cur.len();
    debug_assert!(n >= 3 && next.len() == n);

    for i in 1..n - 1 {
        next[i] = cur[i] + lambda * ((cur[i - 1] + cur[i + 1]) - 2.0 * cur[i]);
    }

    next[0] = match bc.left {
        EndCondition::Dirichlet(v) => v,
        EndCondition::Neumann(g) => {
            let ghost = cur[1] - 2.0 * dx * g;
            cur[0] + lambda * ((ghost + cur[1]) - 2.0 * cur[0])
        }
    };
    next[n - 1] = match bc.right {
        EndCondition::Dirichlet(v) => v,
        EndCondition::Neumann(g) => {
            let ghost = cur[n - 2] + 2.0 * dx * g;
            cur[n - 1] + lambda * ((cur[n - 2] + ghost) - 2.0 * cur[n - 1])
        }
    };
}
