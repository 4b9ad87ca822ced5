//! Material records and the built-in catalog.
//!
//! Catalog values are kept exactly as tabulated for the aluminium, copper and
//! mild-steel rods. The engine is unit-agnostic, so any self-consistent unit
//! system works; the catalog magnitudes behave like W/(cm·K), g/cm³, J/(g·K).

use crate::error::{positive, HeatError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Material {
    pub name: String,
    pub conductivity: f64,
    pub density: f64,
    pub specific_heat: f64,
}

impl Material {
    pub fn new(
        name: impl Into<String>,
        conductivity: f64,
        density: f64,
        specific_heat: f64,
    ) -> Result<Self> {
        thermal_diffusivity(conductivity, density, specific_heat)?;
        Ok(Self {
            name: name.into(),
            conductivity,
            density,
            specific_heat,
        })
    }

    /// α = k / (ρ c).
    pub fn diffusivity(&self) -> f64 {
        self.conductivity / (self.density * self.specific_heat)
    }
}

/// Thermal diffusivity `k / (ρ c)`.
pub fn thermal_diffusivity(k: f64, rho: f64, c: f64) -> Result<f64> {
    positive("conductivity k", k)?;
    positive("density rho", rho)?;
    positive("specific heat c", c)?;
    Ok(k / (rho * c))
}

pub const CATALOG_KEYS: [&str; 3] = ["aluminium", "copper", "mild-steel"];

/// Looks up a catalog material by name (case-insensitive).
pub fn builtin_material(name: &str) -> Result<Material> {
    let (k, rho, c) = match name.trim().to_ascii_lowercase().as_str() {
        "aluminium" => (2.38, 2.7, 0.92),
        "copper" => (4.1, 8.96, 0.376),
        "mild-steel" => (0.064, 7.85, 0.51),
        _ => {
            return Err(HeatError::UnknownMaterial {
                name: name.to_string(),
                valid: CATALOG_KEYS.to_vec(),
            })
        }
    };
    Ok(Material {
        name: name.trim().to_ascii_lowercase(),
        conductivity: k,
        density: rho,
        specific_heat: c,
    })
}
