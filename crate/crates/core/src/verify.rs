//! Seeded comparison of the stepping engine against the exact discrete
//! solution, shared by the `verify` subcommand and the test suites.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boundary::BoundaryCondition;
use crate::error::Result;
use crate::field::TemperatureField;
use crate::oracle::{error_metrics, exact_ftcs_solution};
use crate::step::ftcs_step;

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_CASES: usize = 20;

/// A random stable two-Dirichlet problem.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceCase {
    pub lambda: f64,
    pub left: f64,
    pub right: f64,
    /// Initial values; the ends already equal `left` and `right`.
    pub initial: Vec<f64>,
    pub steps: u32,
}

impl EquivalenceCase {
    /// `N ∈ [5, 65]`, `λ ∈ (0, 0.5]`, ends and interior in `[−50, 50]`,
    /// `1..=1000` steps.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let nodes = rng.gen_range(5..=65);
        let lambda = 0.5 * (1.0 - rng.gen::<f64>());
        let left = rng.gen_range(-50.0..=50.0);
        let right = rng.gen_range(-50.0..=50.0);
        let mut initial: Vec<f64> = (0..nodes).map(|_| rng.gen_range(-50.0..=50.0)).collect();
        initial[0] = left;
        initial[nodes - 1] = right;
        let steps = rng.gen_range(1..=1000);
        Self {
            lambda,
            left,
            right,
            initial,
            steps,
        }
    }

    pub fn bc(&self) -> BoundaryCondition {
        BoundaryCondition::dirichlet(self.left, self.right)
    }

    /// Max-abs gap between stepping and the closed form after `steps`.
    pub fn deviation(&self) -> Result<f64> {
        let bc = self.bc();
        let ic = TemperatureField::new(self.initial.clone(), 0.0);
        let mut stepped = ic.clone();
        for _ in 0..self.steps {
            stepped = ftcs_step(&stepped, self.lambda, &bc, 1.0, 1.0)?;
        }
        let exact = exact_ftcs_solution(&ic, self.lambda, &bc, self.steps, 1.0)?;
        Ok(error_metrics(&stepped, &exact, 1.0)?.max_abs)
    }
}

impl fmt::Display for EquivalenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nodes={} lambda={} left={} right={} steps={}",
            self.initial.len(),
            self.lambda,
            self.left,
            self.right,
            self.steps
        )
    }
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub seed: u64,
    pub cases: Vec<(EquivalenceCase, f64)>,
}

impl EquivalenceReport {
    pub fn max_deviation(&self) -> f64 {
        self.cases.iter().map(|(_, d)| *d).fold(0.0, f64::max)
    }

    /// Cases whose deviation is not below `tol` (NaN counts as failing).
    pub fn failures(&self, tol: f64) -> impl Iterator<Item = (usize, &EquivalenceCase, f64)> {
        self.cases
            .iter()
            .enumerate()
            .filter(move |(_, (_, d))| d.is_nan() || *d >= tol)
            .map(|(i, (c, d))| (i, c, *d))
    }
}

pub fn run_equivalence(seed: u64, count: usize) -> Result<EquivalenceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = (0..count)
        .map(|_| {
            let case = EquivalenceCase::random(&mut rng);
            let d = case.deviation()?;
            Ok((case, d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport { seed, cases })
}
