use crate::boundary::BoundaryCondition;
use crate::error::{HeatError, Result};
use crate::field::TemperatureField;
use crate::simulate::impose_dirichlet;

use super::basis::DiscreteModeBasis;

/// Closed form of `steps` explicit updates with two Dirichlet ends.
///
/// The linear profile between the end values is subtracted, the interior
/// residual is expanded in [`DiscreteModeBasis`], mode `k` is scaled by
/// `g_k^steps`, and the profile is added back. For `steps >= 1` the ends hold
/// the boundary values, matching what stepping produces.
pub fn exact_ftcs_solution(
    ic: &TemperatureField,
    lambda: f64,
    bc: &BoundaryCondition,
    steps: u32,
    dt: f64,
) -> Result<TemperatureField> {
    let (left, right) = bc.dirichlet_pair().ok_or_else(|| {
        HeatError::Unsupported("the exact discrete solution needs both ends Dirichlet".into())
    })?;
    let n = ic.len();
    if n < 3 {
        return Err(HeatError::Config(format!(
            "field needs at least 3 nodes, got {n}"
        )));
    }
    if steps == 0 {
        return Ok(ic.clone());
    }

    let cells = (n - 1) as f64;
    let profile = |i: usize| left + (right - left) * i as f64 / cells;
    let residual: Vec<f64> = (1..n - 1).map(|i| ic.values[i] - profile(i)).collect();

    let basis = DiscreteModeBasis::for_nodes(n);
    let mut coeffs = basis.project(&residual);
    let power = i32::try_from(steps).unwrap_or(i32::MAX);
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c *= basis.amplification(k + 1, lambda).powi(power);
    }
    let interior = basis.reconstruct(&coeffs);

    let mut values = Vec::with_capacity(n);
    values.push(left);
    values.extend(interior.iter().enumerate().map(|(j, r)| r + profile(j + 1)));
    values.push(right);
    impose_dirichlet(&mut values, bc);
    Ok(TemperatureField::new(
        values,
        ic.time + f64::from(steps) * dt,
    ))
}
