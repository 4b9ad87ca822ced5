use std::fmt;

use crate::error::{positive, HeatError, Result};

/// Von Neumann verdict for the explicit scheme, whose amplification factor
/// is `1 − 4λ sin²(θ/2)`; every mode stays bounded iff `λ ≤ 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Marginal,
    Unstable,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Stable => "Stable",
            Stability::Marginal => "Marginal",
            Stability::Unstable => "Unstable",
        })
    }
}

/// Mesh Fourier number `λ = α Δt / Δx²`.
pub fn mesh_fourier_number(alpha: f64, dt: f64, dx: f64) -> Result<f64> {
    positive("diffusivity alpha", alpha)?;
    positive("time step dt", dt)?;
    positive("grid spacing dx", dx)?;
    let lambda = alpha * dt / (dx * dx);
    positive("mesh Fourier number", lambda)
}

pub fn check_stability(lambda: f64) -> Result<Stability> {
    if !lambda.is_finite() {
        return Err(HeatError::Domain {
            field: "mesh Fourier number",
            value: lambda,
            reason: "must be finite",
        });
    }
    positive("mesh Fourier number", lambda)?;
    Ok(if lambda < 0.5 {
        Stability::Stable
    } else if lambda == 0.5 {
        Stability::Marginal
    } else {
        Stability::Unstable
    })
}

/// Largest time step with `λ ≤ 1/2`.
pub fn max_stable_dt(alpha: f64, dx: f64) -> f64 {
    0.5 * dx * dx / alpha
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourier_number_examples() {
        assert_eq!(mesh_fourier_number(1.0, 0.125, 0.5).unwrap(), 0.5);
        assert_eq!(mesh_fourier_number(1.0, 1.0, 1.0).unwrap(), 1.0);
        let dx = 100.0 / 99.0;
        let lam = mesh_fourier_number(0.958132, 0.1, dx).unwrap();
        assert!((lam - 0.09391).abs() < 1e-5, "{lam}");
    }

    #[test]
    fn fourier_number_rejects_bad_input() {
        assert!(mesh_fourier_number(0.0, 1.0, 1.0).is_err());
        assert!(mesh_fourier_number(1.0, -1.0, 1.0).is_err());
        assert!(mesh_fourier_number(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(check_stability(0.25).unwrap(), Stability::Stable);
        assert_eq!(check_stability(0.5).unwrap(), Stability::Marginal);
        assert_eq!(check_stability(0.55).unwrap(), Stability::Unstable);
        assert!(check_stability(f64::NAN).is_err());
        assert!(check_stability(f64::INFINITY).is_err());
    }

    #[test]
    fn max_stable_dt_is_marginal() {
        let dt = max_stable_dt(2.0, 0.5);
        assert_eq!(
            check_stability(mesh_fourier_number(2.0, dt, 0.5).unwrap()).unwrap(),
            Stability::Marginal
        );
    }
}
