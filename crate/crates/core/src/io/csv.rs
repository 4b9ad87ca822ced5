//! Long-format time series: `t,x,temperature`, one row per frame and node.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{HeatError, Location, Result};
use crate::field::TemperatureField;
use crate::grid::Grid1D;
use crate::simulate::SimulationResult;

pub const TIMESERIES_HEADER: &str = "t,x,temperature";

/// Shortest decimal text that parses back to the same `f64`.
pub fn format_number(v: f64) -> String {
    format!("{v}")
}

pub fn write_timeseries_csv(result: &SimulationResult, grid: &Grid1D) -> String {
    let xs: Vec<String> = grid.positions().into_iter().map(format_number).collect();
    let mut out = String::with_capacity(32 * result.frames.len() * xs.len());
    out.push_str(TIMESERIES_HEADER);
    out.push('\n');
    for frame in &result.frames {
        let t = format_number(frame.time);
        for (x, v) in xs.iter().zip(&frame.values) {
            let _ = writeln!(out, "{t},{x},{}", format_number(*v));
        }
    }
    out
}

pub fn save_timeseries_csv(result: &SimulationResult, grid: &Grid1D, path: &Path) -> Result<()> {
    std::fs::write(path, write_timeseries_csv(result, grid)).map_err(|source| HeatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a time-series CSV back into node positions and frames.
pub fn parse_timeseries_csv(text: &str) -> Result<(Vec<f64>, Vec<TemperatureField>)> {
    let err = |line: usize, message: String| HeatError::Parse {
        location: Location::Line(line),
        message,
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, TIMESERIES_HEADER)) => {}
        other => {
            return Err(err(
                1,
                format!(
                    "expected header '{TIMESERIES_HEADER}', got {:?}",
                    other.map(|(_, l)| l)
                ),
            ))
        }
    }
    let mut xs: Vec<f64> = Vec::new();
    let mut frames: Vec<TemperatureField> = Vec::new();
    let mut current: Option<(f64, Vec<f64>)> = None;
    for (idx, line) in lines {
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 3 {
            return Err(err(
                idx + 1,
                format!("expected 3 columns, got {}", cols.len()),
            ));
        }
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| err(idx + 1, format!("'{s}' is not a number")))
        };
        let (t, x, v) = (num(cols[0])?, num(cols[1])?, num(cols[2])?);
        match &mut current {
            Some((ct, values)) if ct.to_bits() == t.to_bits() => values.push(v),
            _ => {
                if let Some((ct, values)) = current.take() {
                    frames.push(TemperatureField::new(values, ct));
                }
                current = Some((t, vec![v]));
            }
        }
        if frames.is_empty() {
            xs.push(x);
        }
    }
    if let Some((ct, values)) = current {
        frames.push(TemperatureField::new(values, ct));
    }
    Ok((xs, frames))
}
