use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::{HeatError, Result};
use crate::field::TemperatureField;
use crate::grid::Grid1D;

/// Where a spike initial condition is placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpikeSite {
    /// Node `floor(N/2)`.
    Mid,
    Node(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum InitialCondition {
    Uniform(f64),
    SpikeAtNode {
        site: SpikeSite,
        spike: f64,
        background: f64,
    },
    /// `A · sin(m π x / L)`.
    SineMode {
        mode: u32,
        amplitude: f64,
    },
    Explicit(Vec<f64>),
}

impl InitialCondition {
    /// Spike at node `floor(N/2)` over a zero background.
    pub fn mid_spike(spike: f64) -> Self {
        InitialCondition::SpikeAtNode {
            site: SpikeSite::Mid,
            spike,
            background: 0.0,
        }
    }

    pub fn validate(&self, grid: &Grid1D) -> Result<()> {
        let n = grid.nodes();
        match self {
            InitialCondition::SpikeAtNode {
                site: SpikeSite::Node(i),
                ..
            } if *i >= n => Err(HeatError::Config(format!(
                "spike node {i} outside grid of {n} nodes"
            ))),
            InitialCondition::SineMode { mode: 0, .. } => {
                Err(HeatError::Config("sine mode number must be >= 1".into()))
            }
            InitialCondition::Explicit(v) if v.len() != n => Err(HeatError::Config(format!(
                "explicit initial condition has {} values, grid has {n} nodes",
                v.len()
            ))),
            _ => Ok(()),
        }
    }
}

/// Parses `uniform:<v>`, `spike:<v>@mid`, `spike:<v>@<index>` or `sine:<m>,<A>`.
impl FromStr for InitialCondition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| -> Result<f64, String> {
            let v: f64 = t
                .trim()
                .parse()
                .map_err(|_| format!("'{}' is not a number", t.trim()))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("value must be finite, got {v}"))
            }
        };
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("expected '<kind>:<args>', got '{s}'"))?;
        match kind.trim().to_ascii_lowercase().as_str() {
            "uniform" => Ok(InitialCondition::Uniform(num(rest)?)),
            "spike" => {
                let (value, at) = rest
                    .split_once('@')
                    .ok_or_else(|| format!("expected 'spike:<value>@<mid|index>', got '{s}'"))?;
                let site = match at.trim() {
                    "mid" => SpikeSite::Mid,
                    idx => SpikeSite::Node(
                        idx.parse()
                            .map_err(|_| format!("'{idx}' is not a node index"))?,
                    ),
                };
                Ok(InitialCondition::SpikeAtNode {
                    site,
                    spike: num(value)?,
                    background: 0.0,
                })
            }
            "sine" => {
                let (m, a) = rest
                    .split_once(',')
                    .ok_or_else(|| format!("expected 'sine:<m>,<amplitude>', got '{s}'"))?;
                let mode: u32 = m
                    .trim()
                    .parse()
                    .map_err(|_| format!("'{}' is not a mode number", m.trim()))?;
                if mode == 0 {
                    return Err("sine mode number must be >= 1".into());
                }
                Ok(InitialCondition::SineMode {
                    mode,
                    amplitude: num(a)?,
                })
            }
            other => Err(format!("unknown initial condition '{other}'")),
        }
    }
}

/// Realizes an initial condition as the field at `t = 0`.
pub fn apply_initial_condition(ic: &InitialCondition, grid: &Grid1D) -> Result<TemperatureField> {
    ic.validate(grid)?;
    let n = grid.nodes();
    let values = match ic {
        InitialCondition::Uniform(v) => vec![*v; n],
        InitialCondition::SpikeAtNode {
            site,
            spike,
            background,
        } => {
            let idx = match site {
                SpikeSite::Mid => grid.mid_index(),
                SpikeSite::Node(i) => *i,
            };
            let mut v = vec![*background; n];
            v[idx] = *spike;
            v
        }
        InitialCondition::SineMode { mode, amplitude } => {
            let k = f64::from(*mode) * PI / grid.length();
            (0..n)
                .map(|i| amplitude * (k * grid.position(i)).sin())
                .collect()
        }
        InitialCondition::Explicit(v) => v.clone(),
    };
    Ok(TemperatureField::new(values, 0.0))
}
