use std::fmt;
use std::str::FromStr;

use crate::error::{HeatError, Result};

/// Condition held at one end of the rod.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EndCondition {
    /// Fixed temperature.
    Dirichlet(f64),
    /// Fixed gradient `dT/dx` (positive x direction). Zero means insulated.
    Neumann(f64),
}

impl EndCondition {
    pub fn insulated() -> Self {
        EndCondition::Neumann(0.0)
    }

    pub fn dirichlet_value(&self) -> Option<f64> {
        match *self {
            EndCondition::Dirichlet(v) => Some(v),
            EndCondition::Neumann(_) => None,
        }
    }

    fn value(&self) -> f64 {
        match *self {
            EndCondition::Dirichlet(v) | EndCondition::Neumann(v) => v,
        }
    }
}

impl fmt::Display for EndCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndCondition::Dirichlet(v) => write!(f, "dirichlet:{v}"),
            EndCondition::Neumann(g) => write!(f, "neumann:{g}"),
        }
    }
}

/// Parses `dirichlet:<value>` or `neumann:<gradient>`.
impl FromStr for EndCondition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, value) = s.split_once(':').ok_or_else(|| {
            format!("expected 'dirichlet:<value>' or 'neumann:<gradient>', got '{s}'")
        })?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| format!("'{}' is not a number", value.trim()))?;
        if !value.is_finite() {
            return Err(format!("boundary value must be finite, got {value}"));
        }
        match kind.trim().to_ascii_lowercase().as_str() {
            "dirichlet" => Ok(EndCondition::Dirichlet(value)),
            "neumann" => Ok(EndCondition::Neumann(value)),
            other => Err(format!("unknown boundary kind '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCondition {
    pub left: EndCondition,
    pub right: EndCondition,
}

impl BoundaryCondition {
    pub fn new(left: EndCondition, right: EndCondition) -> Self {
        Self { left, right }
    }

    pub fn dirichlet(left: f64, right: f64) -> Self {
        Self::new(
            EndCondition::Dirichlet(left),
            EndCondition::Dirichlet(right),
        )
    }

    pub fn insulated() -> Self {
        Self::new(EndCondition::insulated(), EndCondition::insulated())
    }

    /// Both end values when both ends are Dirichlet.
    pub fn dirichlet_pair(&self) -> Option<(f64, f64)> {
        Some((self.left.dirichlet_value()?, self.right.dirichlet_value()?))
    }

    pub fn validate(&self) -> Result<()> {
        for (side, end) in [("left", self.left), ("right", self.right)] {
            if !end.value().is_finite() {
                return Err(HeatError::Config(format!(
                    "{side} boundary value must be finite"
                )));
            }
        }
        Ok(())
    }
}
