//! Grid-refinement study at fixed mesh Fourier number.
//!
//! Holding λ fixed ties `dt` to `dx²`, so the measured error against the
//! continuum solution reflects the scheme's second-order spatial truncation.

use crate::boundary::BoundaryCondition;
use crate::error::{positive, HeatError, Result};
use crate::field::TemperatureField;
use crate::grid::Grid1D;
use crate::initial::InitialCondition;
use crate::material::Material;
use crate::simulate::{simulate, SolverConfig, DEFAULT_STEADY_EPS};

use super::continuum::continuum_solution;
use super::metrics::{error_metrics, ErrorReport};

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergencePoint {
    pub nodes: usize,
    pub dx: f64,
    pub steps: usize,
    /// Time actually reached (`steps · dt`).
    pub time: f64,
    pub error: ErrorReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub points: Vec<ConvergencePoint>,
    /// Least-squares slope of `ln(l2)` against `ln(dx)`; needs two grids.
    pub observed_order: Option<f64>,
}

impl ConvergenceStudy {
    /// `l2` error of each grid divided by that of the next finer grid.
    pub fn error_ratios(&self) -> Vec<f64> {
        self.points
            .windows(2)
            .map(|w| w[0].error.l2 / w[1].error.l2)
            .collect()
    }
}

/// Runs the sine-mode decay problem on each grid and compares the final
/// frame against [`continuum_solution`] at the time reached.
pub fn convergence_study(
    alpha: f64,
    length: f64,
    mode: u32,
    lambda_fixed: f64,
    grids: &[usize],
    t_target: f64,
) -> Result<ConvergenceStudy> {
    positive("diffusivity alpha", alpha)?;
    positive("target time", t_target)?;
    positive("mesh Fourier number", lambda_fixed)?;
    if lambda_fixed > 0.5 {
        return Err(HeatError::Domain {
            field: "mesh Fourier number",
            value: lambda_fixed,
            reason: "a convergence study needs lambda <= 0.5",
        });
    }
    if grids.is_empty() {
        return Err(HeatError::Config("no grids given".into()));
    }
    if grids.windows(2).any(|w| w[1] <= w[0]) {
        return Err(HeatError::Config(format!(
            "grids must be strictly increasing, got {grids:?}"
        )));
    }
    // only α matters to the scheme
    let material = Material::new("reference", alpha, 1.0, 1.0)?;
    let amplitude = 1.0;

    let mut points = Vec::with_capacity(grids.len());
    for &nodes in grids {
        let grid = Grid1D::new(length, nodes)?;
        let dx = grid.dx();
        let dt = lambda_fixed * dx * dx / alpha;
        let steps = ((t_target / dt).round() as usize).max(2);
        let config = SolverConfig {
            grid,
            material: material.clone(),
            bc: BoundaryCondition::dirichlet(0.0, 0.0),
            ic: InitialCondition::SineMode { mode, amplitude },
            dt,
            t_end: steps as f64 * dt,
            sample_every: steps,
            steady_eps: DEFAULT_STEADY_EPS,
        };
        let result = simulate(&config)?;
        let last = result.final_frame();
        let exact = (0..nodes)
            .map(|i| {
                continuum_solution(grid.position(i), last.time, alpha, length, mode, amplitude)
            })
            .collect::<Result<Vec<_>>>()?;
        let error = error_metrics(last, &TemperatureField::new(exact, last.time), dx)?;
        points.push(ConvergencePoint {
            nodes,
            dx,
            steps,
            time: last.time,
            error,
        });
    }

    let observed_order = if points.len() >= 2 {
        let xs: Vec<f64> = points.iter().map(|p| p.dx.ln()).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.error.l2.ln()).collect();
        Some(least_squares_slope(&xs, &ys))
    } else {
        None
    };
    for p in &mut points {
        p.error.observed_order = observed_order;
    }
    Ok(ConvergenceStudy {
        points,
        observed_order,
    })
}

/// Ordinary least-squares slope of `ys` on `xs`.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}
