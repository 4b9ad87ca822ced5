use std::f64::consts::PI;

use crate::error::{positive, HeatError, Result};

/// Separated solution `A sin(mπx/L) exp(−α (mπ/L)² t)` with zero ends.
pub fn continuum_solution(
    x: f64,
    t: f64,
    alpha: f64,
    length: f64,
    mode: u32,
    amplitude: f64,
) -> Result<f64> {
    positive("rod length", length)?;
    positive("diffusivity alpha", alpha)?;
    if !(0.0..=length).contains(&x) {
        return Err(HeatError::Domain {
            field: "position x",
            value: x,
            reason: "must lie in [0, L]",
        });
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(HeatError::Domain {
            field: "time t",
            value: t,
            reason: "must be finite and >= 0",
        });
    }
    if mode == 0 {
        return Err(HeatError::Domain {
            field: "mode number",
            value: 0.0,
            reason: "must be >= 1",
        });
    }
    let k = f64::from(mode) * PI / length;
    Ok(amplitude * (k * x).sin() * (-alpha * k * k * t).exp())
}
