use crate::error::{positive, HeatError, Result};

/// Uniform node layout on `[0, L]` with `N` nodes, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    length: f64,
    nodes: usize,
    dx: f64,
}

impl Grid1D {
    pub fn new(length: f64, nodes: usize) -> Result<Self> {
        positive("rod length", length)?;
        if nodes < 3 {
            return Err(HeatError::Config(format!(
                "grid needs at least 3 nodes, got {nodes}"
            )));
        }
        Ok(Self {
            length,
            nodes,
            dx: length / (nodes - 1) as f64,
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Position of node `i`. The last node sits exactly at `L`.
    pub fn position(&self, i: usize) -> f64 {
        if i + 1 == self.nodes {
            self.length
        } else {
            i as f64 * self.dx
        }
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.nodes).map(|i| self.position(i)).collect()
    }

    /// Index of the middle node, `floor(N/2)`.
    pub fn mid_index(&self) -> usize {
        self.nodes / 2
    }
}
