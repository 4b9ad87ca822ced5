use crate::error::{positive, HeatError, Result};
use crate::field::TemperatureField;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub max_abs: f64,
    /// Grid-weighted RMS difference.
    pub l2: f64,
    pub observed_order: Option<f64>,
}

/// Max-abs and grid-weighted RMS difference between two fields.
///
/// The RMS uses trapezoid weights over `L = (N−1) dx`, so a constant
/// difference `c` gives exactly `|c|` and `l2 <= max_abs` always holds.
pub fn error_metrics(a: &TemperatureField, b: &TemperatureField, dx: f64) -> Result<ErrorReport> {
    if a.len() != b.len() {
        return Err(HeatError::Config(format!(
            "field lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 2 {
        return Err(HeatError::Config(
            "need at least 2 nodes to measure an error".into(),
        ));
    }
    positive("grid spacing dx", dx)?;
    let n = a.len();
    let length = dx * (n - 1) as f64;
    let mut max_abs = 0.0_f64;
    let mut sum_sq = 0.0;
    for (i, (x, y)) in a.values.iter().zip(&b.values).enumerate() {
        let d = (x - y).abs();
        max_abs = max_abs.max(d);
        let w = if i == 0 || i + 1 == n { 0.5 } else { 1.0 };
        sum_sq += w * d * d * dx;
    }
    // guard against the last ulp pushing l2 above max_abs
    let l2 = (sum_sq / length).sqrt().min(max_abs);
    Ok(ErrorReport {
        max_abs,
        l2,
        observed_order: None,
    })
}
