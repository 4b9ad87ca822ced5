use std::f64::consts::PI;

/// Eigenvectors `v_k(i) = sin(kπ i / (M+1))` of the interior second
/// difference with zero ends, `i, k = 1..=M`.
#[derive(Debug, Clone)]
pub struct DiscreteModeBasis {
    interior: usize,
    /// Row `k-1` holds `v_k(1..=M)`.
    vectors: Vec<Vec<f64>>,
}

impl DiscreteModeBasis {
    /// Basis for a grid of `nodes` points (`M = nodes − 2` interior nodes).
    pub fn for_nodes(nodes: usize) -> Self {
        Self::new(nodes.saturating_sub(2))
    }

    pub fn new(interior: usize) -> Self {
        let h = PI / (interior + 1) as f64;
        let vectors = (1..=interior)
            .map(|k| (1..=interior).map(|i| ((k * i) as f64 * h).sin()).collect())
            .collect();
        Self { interior, vectors }
    }

    pub fn interior_count(&self) -> usize {
        self.interior
    }

    /// `v_k` for `k` in `1..=M`.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.vectors[k - 1]
    }

    fn half_angle_sin_sq(&self, k: usize) -> f64 {
        let s = (k as f64 * PI / (2.0 * (self.interior + 1) as f64)).sin();
        s * s
    }

    /// `μ_k = −(4/dx²) sin²(kπ / (2(M+1)))`.
    pub fn eigenvalue(&self, k: usize, dx: f64) -> f64 {
        -4.0 / (dx * dx) * self.half_angle_sin_sq(k)
    }

    /// Per-step multiplier `g_k = 1 − 4λ sin²(kπ / (2(M+1)))`.
    pub fn amplification(&self, k: usize, lambda: f64) -> f64 {
        1.0 - 4.0 * lambda * self.half_angle_sin_sq(k)
    }

    /// Mode coefficients of an interior vector (length `M`).
    pub fn project(&self, interior: &[f64]) -> Vec<f64> {
        let scale = 2.0 / (self.interior + 1) as f64;
        self.vectors
            .iter()
            .map(|v| scale * v.iter().zip(interior).map(|(a, b)| a * b).sum::<f64>())
            .collect()
    }

    /// Interior vector from mode coefficients.
    pub fn reconstruct(&self, coeffs: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.interior];
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        out
    }
}
