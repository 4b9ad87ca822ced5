/// Node temperatures at one time instant.
#[derive(Debug, Clone, PartialEq)]
pub struct TemperatureField {
    pub values: Vec<f64>,
    pub time: f64,
    /// Set once any value has become non-finite.
    pub diverged: bool,
}

impl TemperatureField {
    pub fn new(values: Vec<f64>, time: f64) -> Self {
        let diverged = values.iter().any(|v| !v.is_finite());
        Self {
            values,
            time,
            diverged,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Trapezoid-weighted node sum (end nodes count half).
    ///
    /// Under insulated ghost-node ends this is the quantity the explicit
    /// update conserves exactly; multiply by `dx` for total heat content.
    pub fn trapezoid_sum(&self) -> f64 {
        let n = self.values.len();
        match n {
            0 => 0.0,
            1 => self.values[0],
            _ => {
                let inner: f64 = self.values[1..n - 1].iter().sum();
                inner + 0.5 * (self.values[0] + self.values[n - 1])
            }
        }
    }

    pub fn min_max(&self) -> (f64, f64) {
        self.values
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }
}
