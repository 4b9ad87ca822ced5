use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HeatError {
    /// A numeric argument is outside its admissible domain.
    #[error("invalid {field}: {value} ({reason})")]
    Domain {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("unknown material '{name}' (valid: {})", valid.join(", "))]
    UnknownMaterial {
        name: String,
        valid: Vec<&'static str>,
    },

    #[error("configuration error: {0}")]
    Config(String),

    /// A query that has no well-defined answer for the given boundary data.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{location}: {message}")]
    Parse { location: Location, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Where a configuration value came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Flag(String),
    Default(String),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Line(n) => write!(f, "line {n}"),
            Location::Flag(name) => write!(f, "flag --{name}"),
            Location::Default(key) => write!(f, "default for '{key}'"),
        }
    }
}

pub type Result<T, E = HeatError> = std::result::Result<T, E>;

/// Checks that `value` is finite and strictly positive.
pub(crate) fn positive(field: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        Err(HeatError::Domain {
            field,
            value,
            reason: "must be finite",
        })
    } else if value <= 0.0 {
        Err(HeatError::Domain {
            field,
            value,
            reason: "must be > 0",
        })
    } else {
        Ok(value)
    }
}
