//! Stationary distributions of rooted random walks over layered graphs.
//!
//! The hybrid walk restarts at the root with probability `alpha`. Otherwise
//! it picks layer `i` with probability `p_i` and follows an out-edge of the
//! current node in that layer with probability proportional to its weight.
//! A node without out-edges in the chosen layer sends the walker back to the
//! root. The score of a node is its stationary probability.

mod monte_carlo;
mod rooted;
mod transition;

use serde::Serialize;

pub use monte_carlo::monte_carlo_stationary;
pub use rooted::{rooted_pagerank, weighted_rooted_pagerank};
pub use transition::{hrpr_score, hybrid_transition, stationary, TransitionOperator, WalkEngine};

use crate::error::{Error, Result};

pub const DEFAULT_ALPHA: f64 = 0.15;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 100_000;

/// Restart probability, layer mixture and power-iteration controls.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkConfig {
    pub alpha: f64,
    /// One probability per layer, in the graph's layer order.
    pub mixture: Vec<f64>,
    /// L1 change between iterates at which power iteration stops.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl WalkConfig {
    pub fn new(alpha: f64, mixture: Vec<f64>) -> Result<Self> {
        let cfg = WalkConfig {
            alpha,
            mixture,
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_tolerance(mut self, tolerance: f64, max_iterations: usize) -> Result<Self> {
        self.tolerance = tolerance;
        self.max_iterations = max_iterations;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::config(format!("alpha {} must lie in (0, 1)", self.alpha)));
        }
        if self.mixture.is_empty() {
            return Err(Error::config("layer mixture is empty"));
        }
        if self.mixture.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::config(format!("layer mixture {:?} has a negative entry", self.mixture)));
        }
        let sum: f64 = self.mixture.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::config(format!("layer mixture {:?} sums to {sum}", self.mixture)));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 || self.max_iterations == 0 {
            return Err(Error::config("tolerance and max iterations must be positive"));
        }
        Ok(())
    }
}

/// Probabilities indexed like the graph's node list.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution(pub Vec<f64>);

impl StationaryDistribution {
    pub fn probabilities(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, index: usize) -> f64 {
        self.0[index]
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Largest absolute difference to another distribution of the same length.
    pub fn max_abs_diff(&self, other: &StationaryDistribution) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
