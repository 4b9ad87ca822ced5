//! Line-oriented `key = value` configuration.
//!
//! ```text
//! # aluminium rod, one end held at 50
//! material = aluminium
//! bc.right = dirichlet:50
//! ```
//!
//! Unknown keys are rejected. Every error carries the line (or CLI flag)
//! the offending value came from.

use std::collections::BTreeMap;

use crate::boundary::{BoundaryCondition, EndCondition};
use crate::error::{HeatError, Location, Result};
use crate::grid::Grid1D;
use crate::initial::InitialCondition;
use crate::material::{builtin_material, Material};
use crate::simulate::{SolverConfig, DEFAULT_STEADY_EPS};

/// Every accepted key.
pub const KEYS: [&str; 13] = [
    "material",
    "material.k",
    "material.rho",
    "material.c",
    "rod.length",
    "grid.nodes",
    "time.dt",
    "time.end",
    "time.sample_every",
    "bc.left",
    "bc.right",
    "ic",
    "steady.eps",
];

const TRIPLE: [&str; 3] = ["material.k", "material.rho", "material.c"];

/// Mesh Fourier number used to derive `time.dt` when it is not given.
pub const DEFAULT_LAMBDA_TARGET: f64 = 0.4;

fn default_for(key: &str) -> Option<&'static str> {
    Some(match key {
        "rod.length" => "100",
        "grid.nodes" => "101",
        "time.end" => "6000",
        "time.sample_every" => "60",
        "bc.left" | "bc.right" => "dirichlet:0",
        "ic" => "spike:50@mid",
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub value: String,
    pub location: Location,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigDocument {
    entries: BTreeMap<String, Entry>,
}

fn parse_err(location: Location, message: impl Into<String>) -> HeatError {
    HeatError::Parse {
        location,
        message: message.into(),
    }
}

impl ConfigDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut doc = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let loc = Location::Line(idx + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                parse_err(loc.clone(), format!("expected 'key = value', got '{line}'"))
            })?;
            let key = key.trim();
            let value = value.trim();
            if !KEYS.contains(&key) {
                return Err(parse_err(
                    loc,
                    format!("unknown key '{key}' (valid: {})", KEYS.join(", ")),
                ));
            }
            if value.is_empty() {
                return Err(parse_err(loc, format!("missing value for '{key}'")));
            }
            if let Some(prev) = doc.entries.get(key) {
                return Err(parse_err(
                    loc,
                    format!("duplicate key '{key}' (first set at {})", prev.location),
                ));
            }
            let clash = if key == "material" {
                TRIPLE.iter().find_map(|k| doc.entries.get(*k))
            } else if TRIPLE.contains(&key) {
                doc.entries.get("material")
            } else {
                None
            };
            if let Some(prev) = clash {
                return Err(parse_err(
                    loc,
                    format!(
                        "'{key}' conflicts with the material given at {}; use a catalog name or the k/rho/c triple",
                        prev.location
                    ),
                ));
            }
            doc.entries.insert(
                key.to_string(),
                Entry {
                    value: value.to_string(),
                    location: loc,
                },
            );
        }
        Ok(doc)
    }

    /// Sets a value with higher precedence than anything already present.
    pub fn set(&mut self, key: &str, value: impl Into<String>, location: Location) -> Result<()> {
        if !KEYS.contains(&key) {
            return Err(parse_err(location, format!("unknown key '{key}'")));
        }
        if key == "material" {
            for k in TRIPLE {
                self.entries.remove(k);
            }
        } else if TRIPLE.contains(&key) {
            self.entries.remove("material");
        }
        self.entries.insert(
            key.to_string(),
            Entry {
                value: value.into(),
                location,
            },
        );
        Ok(())
    }

    /// Location of the first explicitly set key among `keys`.
    fn blame(&self, keys: &[&str]) -> Location {
        keys.iter()
            .find_map(|k| self.entries.get(*k).map(|e| e.location.clone()))
            .unwrap_or_else(|| Location::Default(keys[0].to_string()))
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.get(key)
    }

    fn value(&self, key: &str) -> Entry {
        self.entries.get(key).cloned().unwrap_or_else(|| Entry {
            value: default_for(key).unwrap_or_default().to_string(),
            location: Location::Default(key.to_string()),
        })
    }

    fn number(&self, key: &str) -> Result<(f64, Location)> {
        let e = self.value(key);
        let v: f64 = e.value.parse().map_err(|_| {
            parse_err(
                e.location.clone(),
                format!("{key}: '{}' is not a number", e.value),
            )
        })?;
        if !v.is_finite() {
            return Err(parse_err(
                e.location,
                format!("{key}: value must be finite"),
            ));
        }
        Ok((v, e.location))
    }

    fn positive_number(&self, key: &str) -> Result<(f64, Location)> {
        let (v, loc) = self.number(key)?;
        if v <= 0.0 {
            return Err(parse_err(loc, format!("{key}: must be > 0, got {v}")));
        }
        Ok((v, loc))
    }

    fn count(&self, key: &str) -> Result<(usize, Location)> {
        let e = self.value(key);
        let v = e.value.parse().map_err(|_| {
            parse_err(
                e.location.clone(),
                format!("{key}: '{}' is not a non-negative integer", e.value),
            )
        })?;
        Ok((v, e.location))
    }

    fn parsed<T: std::str::FromStr<Err = String>>(&self, key: &str) -> Result<T> {
        let e = self.value(key);
        e.value
            .parse()
            .map_err(|msg| parse_err(e.location, format!("{key}: {msg}")))
    }

    pub fn material(&self) -> Result<Material> {
        if let Some(e) = self.entries.get("material") {
            return builtin_material(&e.value)
                .map_err(|err| parse_err(e.location.clone(), err.to_string()));
        }
        let present: Vec<&str> = TRIPLE
            .iter()
            .copied()
            .filter(|k| self.entries.contains_key(*k))
            .collect();
        if present.is_empty() {
            return Err(HeatError::Config(
                "no material given: set 'material' or 'material.k', 'material.rho', 'material.c'"
                    .into(),
            ));
        }
        if let Some(missing) = TRIPLE.iter().find(|k| !present.contains(k)) {
            let loc = self.entries[present[0]].location.clone();
            return Err(parse_err(
                loc,
                format!("material triple incomplete: missing '{missing}'"),
            ));
        }
        let (k, _) = self.positive_number("material.k")?;
        let (rho, _) = self.positive_number("material.rho")?;
        let (c, _) = self.positive_number("material.c")?;
        Material::new("custom", k, rho, c)
            .map_err(|e| parse_err(self.blame(&TRIPLE), e.to_string()))
    }

    /// Resolves defaults and checks every configuration invariant.
    pub fn build(&self) -> Result<SolverConfig> {
        let material = self.material()?;
        let (length, length_loc) = self.positive_number("rod.length")?;
        let (nodes, nodes_loc) = self.count("grid.nodes")?;
        let grid = Grid1D::new(length, nodes).map_err(|e| {
            let loc = if nodes < 3 {
                nodes_loc.clone()
            } else {
                length_loc.clone()
            };
            parse_err(loc, e.to_string())
        })?;

        let dt = match self.entries.get("time.dt") {
            Some(_) => self.positive_number("time.dt")?.0,
            None => {
                let dt = DEFAULT_LAMBDA_TARGET * grid.dx() * grid.dx() / material.diffusivity();
                if !(dt.is_finite() && dt > 0.0) {
                    return Err(parse_err(
                        self.blame(&["grid.nodes", "rod.length", "material", "material.k"]),
                        format!("derived time step {dt} is not usable"),
                    ));
                }
                dt
            }
        };
        let (t_end, _) = self.positive_number("time.end")?;
        if t_end <= dt {
            return Err(parse_err(
                self.blame(&["time.end", "time.dt", "grid.nodes", "rod.length"]),
                format!("time.end ({t_end}) must exceed the time step ({dt})"),
            ));
        }
        let (sample_every, sample_loc) = self.count("time.sample_every")?;
        if sample_every == 0 {
            return Err(parse_err(sample_loc, "time.sample_every must be >= 1"));
        }
        let steady_eps = match self.entries.get("steady.eps") {
            Some(_) => self.positive_number("steady.eps")?.0,
            None => DEFAULT_STEADY_EPS,
        };

        let left: EndCondition = self.parsed("bc.left")?;
        let right: EndCondition = self.parsed("bc.right")?;
        let ic: InitialCondition = self.parsed("ic")?;
        ic.validate(&grid)
            .map_err(|e| parse_err(self.value("ic").location, e.to_string()))?;

        let config = SolverConfig {
            grid,
            material,
            bc: BoundaryCondition::new(left, right),
            ic,
            dt,
            t_end,
            sample_every,
            steady_eps,
        };
        // remaining checks concern the derived mesh Fourier number
        config.validate().map_err(|e| {
            parse_err(
                self.blame(&[
                    "time.dt",
                    "grid.nodes",
                    "rod.length",
                    "material",
                    "material.k",
                ]),
                e.to_string(),
            )
        })?;
        Ok(config)
    }
}

/// Parses a configuration document into a validated solver configuration.
pub fn parse_config(text: &str) -> Result<SolverConfig> {
    ConfigDocument::parse(text)?.build()
}
