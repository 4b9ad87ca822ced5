//! Time integration driver, steady-state detection and the linear steady
//! profile for two fixed-temperature ends.

use crate::boundary::{BoundaryCondition, EndCondition};
use crate::error::{positive, HeatError, Result};
use crate::field::TemperatureField;
use crate::grid::Grid1D;
use crate::initial::{apply_initial_condition, InitialCondition};
use crate::material::Material;
use crate::stability::{check_stability, mesh_fourier_number, Stability};
use crate::step::step_into;

pub const DEFAULT_STEADY_EPS: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub grid: Grid1D,
    pub material: Material,
    pub bc: BoundaryCondition,
    pub ic: InitialCondition,
    pub dt: f64,
    pub t_end: f64,
    /// Steps between stored frames.
    pub sample_every: usize,
    /// Steady once the largest nodal rate of change drops below this (°C/s).
    pub steady_eps: f64,
}

impl SolverConfig {
    pub fn lambda(&self) -> Result<f64> {
        mesh_fourier_number(self.material.diffusivity(), self.dt, self.grid.dx())
    }

    pub fn validate(&self) -> Result<()> {
        Material::new(
            self.material.name.clone(),
            self.material.conductivity,
            self.material.density,
            self.material.specific_heat,
        )?;
        self.bc.validate()?;
        self.ic.validate(&self.grid)?;
        positive("time step dt", self.dt)?;
        positive("end time", self.t_end)?;
        if self.t_end <= self.dt {
            return Err(HeatError::Config(format!(
                "end time {} must exceed the time step {}",
                self.t_end, self.dt
            )));
        }
        if self.sample_every == 0 {
            return Err(HeatError::Config("sample_every must be >= 1".into()));
        }
        positive("steady-state threshold", self.steady_eps)?;
        self.lambda()?;
        Ok(())
    }

    /// Initial field with Dirichlet end values imposed.
    pub fn initial_field(&self) -> Result<TemperatureField> {
        let mut field = apply_initial_condition(&self.ic, &self.grid)?;
        impose_dirichlet(&mut field.values, &self.bc);
        Ok(field)
    }

    /// Number of steps needed to reach `t_end`, i.e. `ceil(t_end / dt)`
    /// with round-off slack so an exact multiple is not overshot.
    pub fn step_count(&self) -> usize {
        let ratio = self.t_end / self.dt;
        let nearest = ratio.round();
        if (ratio - nearest).abs() <= 1e-9 * nearest.max(1.0) {
            nearest as usize
        } else {
            ratio.ceil() as usize
        }
    }
}

pub(crate) fn impose_dirichlet(values: &mut [f64], bc: &BoundaryCondition) {
    if let EndCondition::Dirichlet(v) = bc.left {
        values[0] = v;
    }
    if let (EndCondition::Dirichlet(v), Some(last)) = (bc.right, values.last_mut()) {
        *last = v;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    /// Stored frames in time order; the first is the initial field at t = 0.
    pub frames: Vec<TemperatureField>,
    pub dt: f64,
    pub lambda: f64,
    pub stability: Stability,
    pub steady_time: Option<f64>,
    pub diverged_at: Option<f64>,
}

impl SimulationResult {
    pub fn final_frame(&self) -> &TemperatureField {
        self.frames
            .last()
            .expect("a result always holds the initial frame")
    }
}

/// Runs the explicit scheme from the initial condition to `t_end`.
///
/// An unstable λ is recorded, not rejected. Divergence is flagged at the
/// first step where a value is non-finite or leaves the data range by more
/// than ten times its scale; stepping stops once values are non-finite.
pub fn simulate(config: &SolverConfig) -> Result<SimulationResult> {
    config.validate()?;
    let lambda = config.lambda()?;
    let stability = check_stability(lambda)?;
    let dx = config.grid.dx();
    let dt = config.dt;

    let initial = config.initial_field()?;
    let band = DivergenceBand::new(&initial, &config.bc, config.grid.length());
    let mut cur = initial.values.clone();
    let mut next = vec![0.0; cur.len()];
    let mut frames = vec![initial];
    let mut steady_time = None;
    let mut diverged_at = None;

    let steps = config.step_count();
    for j in 1..=steps {
        step_into(&cur, &mut next, lambda, &config.bc, dx);
        let t = j as f64 * dt;
        let finite = next.iter().all(|v| v.is_finite());
        if diverged_at.is_none() && (!finite || !band.contains(&next)) {
            diverged_at = Some(t);
        }
        if j % config.sample_every == 0 || j == steps || !finite {
            if steady_time.is_none()
                && diverged_at.is_none()
                && max_rate(&cur, &next, dt) < config.steady_eps
            {
                steady_time = Some(t);
            }
            frames.push(TemperatureField::new(next.clone(), t));
        }
        if !finite {
            break;
        }
        std::mem::swap(&mut cur, &mut next);
    }

    Ok(SimulationResult {
        frames,
        dt,
        lambda,
        stability,
        steady_time,
        diverged_at,
    })
}

struct DivergenceBand {
    lo: f64,
    hi: f64,
}

impl DivergenceBand {
    fn new(initial: &TemperatureField, bc: &BoundaryCondition, length: f64) -> Self {
        let (mut lo, mut hi) = initial.min_max();
        let mut scale = (hi - lo).max(lo.abs()).max(hi.abs());
        for end in [bc.left, bc.right] {
            match end {
                EndCondition::Dirichlet(v) => {
                    lo = lo.min(v);
                    hi = hi.max(v);
                    scale = scale.max(v.abs());
                }
                // a prescribed flux can legitimately push values past the data range
                EndCondition::Neumann(g) => scale += g.abs() * length,
            }
        }
        scale = scale.max(hi - lo);
        Self {
            lo: lo - 10.0 * scale,
            hi: hi + 10.0 * scale,
        }
    }

    fn contains(&self, values: &[f64]) -> bool {
        values.iter().all(|&v| v >= self.lo && v <= self.hi)
    }
}

fn max_rate(prev: &[f64], next: &[f64], dt: f64) -> f64 {
    prev.iter()
        .zip(next)
        .map(|(a, b)| (b - a).abs() / dt)
        .fold(0.0, f64::max)
}

/// True iff `max_i |next_i − prev_i| / dt < eps`.
pub fn detect_steady_state(
    prev: &TemperatureField,
    next: &TemperatureField,
    dt: f64,
    eps: f64,
) -> Result<bool> {
    if prev.len() != next.len() {
        return Err(HeatError::Config(format!(
            "field lengths differ: {} vs {}",
            prev.len(),
            next.len()
        )));
    }
    positive("time step dt", dt)?;
    Ok(max_rate(&prev.values, &next.values, dt) < eps)
}

/// Straight line between two fixed end temperatures.
pub fn linear_steady_profile(bc: &BoundaryCondition, grid: &Grid1D) -> Result<TemperatureField> {
    let (left, right) = bc.dirichlet_pair().ok_or_else(|| {
        HeatError::Unsupported(
            "steady profile needs both ends Dirichlet; with a Neumann end it is not unique".into(),
        )
    })?;
    let l = grid.length();
    let values = (0..grid.nodes())
        .map(|i| left + (right - left) * grid.position(i) / l)
        .collect();
    Ok(TemperatureField::new(values, 0.0))
}
