use rayon::prelude::*;
use serde::Serialize;

use super::{HrprContext, Population};
use crate::error::{Error, Result};
use crate::eval::{accuracy_ci, auc};
use crate::walk::WalkConfig;

/// One point of the layer-mixture grid with its evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub p_cosine: f64,
    pub p_presenter: f64,
    pub p_break: f64,
    pub auc: f64,
    pub accuracy: f64,
    pub decisions: usize,
}

/// Mixtures `(p_cosine, p_presenter, p_break)` on the simplex with the given
/// step, ordered by `p_cosine` then `p_presenter`.
pub fn simplex_grid(step: f64) -> Result<Vec<(f64, f64, f64)>> {
    let n = (1.0 / step).round();
    if step.is_nan() || step <= 0.0 || n < 1.0 || (n * step - 1.0).abs() > 1e-9 {
        return Err(Error::config(format!("step {step} does not divide 1 evenly")));
    }
    let n = n as usize;
    let mut out = Vec::with_capacity((n + 1) * (n + 2) / 2);
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            out.push((i as f64 / n as f64, j as f64 / n as f64, k as f64 / n as f64));
        }
    }
    Ok(out)
}

/// Evaluates the hybrid walk predictor at every grid mixture. All points use
/// the same population so the surface is comparable.
pub fn sweep(
    context: &HrprContext<'_>,
    base: &WalkConfig,
    merged: bool,
    step: f64,
    population: Population,
) -> Result<Vec<SweepPoint>> {
    simplex_grid(step)?
        .into_par_iter()
        .map(|(p_cosine, p_presenter, p_break)| {
            let config = WalkConfig {
                mixture: vec![p_cosine, p_break, p_presenter],
                ..base.clone()
            };
            config.validate()?;
            let decisions = context.predict(&config, merged, population)?;
            let (accuracy, _) = accuracy_ci(&decisions)?;
            Ok(SweepPoint {
                p_cosine,
                p_presenter,
                p_break,
                auc: auc(&decisions)?,
                accuracy,
                decisions: decisions.len(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes_and_order() {
        let g = simplex_grid(0.1).unwrap();
        assert_eq!(g.len(), 66);
        assert_eq!(g[0], (0.0, 0.0, 1.0));
        assert_eq!(g[65], (1.0, 0.0, 0.0));
        assert!(g.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        assert_eq!(simplex_grid(0.5).unwrap().len(), 6);
        assert_eq!(simplex_grid(1.0).unwrap().len(), 3);
        assert!(simplex_grid(0.3).is_err());
        assert!(simplex_grid(0.0).is_err());
        for (a, b, c) in g {
            assert!((a + b + c - 1.0).abs() <= 1e-12);
        }
    }
}
