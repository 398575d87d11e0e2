use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{StationaryDistribution, WalkConfig, WalkEngine};
use crate::error::{Error, Result};
use crate::graphs::{LayeredGraph, Node};

/// Simulates the hybrid walk step by step and returns visit frequencies.
///
/// The first 1% of steps are discarded as burn-in. The walk starts at the root.
pub fn monte_carlo_stationary(
    graph: &LayeredGraph,
    root: &Node,
    config: &WalkConfig,
    steps: usize,
    seed: u64,
) -> Result<StationaryDistribution> {
    config.validate()?;
    if steps == 0 {
        return Err(Error::config("monte carlo walk needs at least one step"));
    }
    let engine = WalkEngine::new(graph);
    if config.mixture.len() != engine.layer_count() {
        return Err(Error::config(format!(
            "mixture has {} entries for {} layers",
            config.mixture.len(),
            engine.layer_count()
        )));
    }
    let r = engine.root_index(root)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let burn_in = steps / 100;
    let mut counts = vec![0u64; graph.nodes().len()];
    let mut current = r;
    for step in 0..steps {
        current = next_node(&engine, config, r, current, &mut rng);
        if step >= burn_in {
            counts[current] += 1;
        }
    }
    let total = (steps - burn_in) as f64;
    Ok(StationaryDistribution(counts.into_iter().map(|c| c as f64 / total).collect()))
}

fn next_node(engine: &WalkEngine<'_>, config: &WalkConfig, root: usize, current: usize, rng: &mut ChaCha8Rng) -> usize {
    if rng.gen::<f64>() < config.alpha {
        return root;
    }
    let layer = pick(config.mixture.iter().copied().enumerate(), rng.gen::<f64>());
    let row = engine.layer_row(layer, current);
    if row.is_empty() {
        return root;
    }
    pick(row.iter().copied(), rng.gen::<f64>())
}

/// Inverse-CDF draw from (item, probability) pairs; rounding falls to the last
/// item with non-zero probability.
fn pick(items: impl Iterator<Item = (usize, f64)>, u: f64) -> usize {
    let mut acc = 0.0;
    let mut last = 0;
    for (i, p) in items {
        if p <= 0.0 {
            continue;
        }
        acc += p;
        last = i;
        if u < acc {
            return i;
        }
    }
    last
}
