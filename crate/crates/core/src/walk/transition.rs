use std::collections::BTreeMap;

use super::{StationaryDistribution, WalkConfig};
use crate::error::{Error, Result};
use crate::graphs::{LayeredGraph, Node};

/// Row-normalised layers of a graph, indexed by node position. Built once
/// and shared across roots and mixtures.
#[derive(Debug, Clone)]
pub struct WalkEngine<'g> {
    graph: &'g LayeredGraph,
    /// `rows[layer][node]` = (neighbor, w / out-weight) pairs.
    rows: Vec<Vec<Vec<(usize, f64)>>>,
}

impl<'g> WalkEngine<'g> {
    pub fn new(graph: &'g LayeredGraph) -> Self {
        let rows = graph
            .layers()
            .iter()
            .map(|layer| {
                graph
                    .nodes()
                    .iter()
                    .map(|node| {
                        let total = layer.out_weight(node);
                        layer
                            .out_edges(node)
                            .map(|(n, w)| (graph.index_of(n).expect("validated endpoint"), w / total))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        WalkEngine { graph, rows }
    }

    pub fn graph(&self) -> &LayeredGraph {
        self.graph
    }

    pub fn layer_count(&self) -> usize {
        self.rows.len()
    }

    /// Normalised out-edges of `node` in `layer`.
    pub fn layer_row(&self, layer: usize, node: usize) -> &[(usize, f64)] {
        &self.rows[layer][node]
    }

    pub fn root_index(&self, root: &Node) -> Result<usize> {
        self.graph
            .index_of(root)
            .ok_or_else(|| Error::validation(format!("root {root} is not a node of the graph for slot '{}'", self.graph.slot)))
    }

    pub fn transition(&self, root: usize, config: &WalkConfig) -> Result<TransitionOperator> {
        config.validate()?;
        if config.mixture.len() != self.rows.len() {
            return Err(Error::config(format!(
                "mixture has {} entries for {} layers",
                config.mixture.len(),
                self.rows.len()
            )));
        }
        let n = self.graph.nodes().len();
        if root >= n {
            return Err(Error::validation(format!("root index {root} out of range")));
        }
        let alpha = config.alpha;
        let mut scratch = vec![0.0; n];
        let mut touched = Vec::new();
        let mut rows = Vec::with_capacity(n);
        for c in 0..n {
            let mut add = |j: usize, v: f64, scratch: &mut Vec<f64>| {
                if scratch[j] == 0.0 {
                    touched.push(j);
                }
                scratch[j] += v;
            };
            add(root, alpha, &mut scratch);
            for (layer, &p) in self.rows.iter().zip(&config.mixture) {
                if p == 0.0 {
                    continue;
                }
                let row = &layer[c];
                if row.is_empty() {
                    add(root, (1.0 - alpha) * p, &mut scratch);
                } else {
                    for &(j, q) in row {
                        add(j, (1.0 - alpha) * p * q, &mut scratch);
                    }
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let row: Vec<(usize, f64)> = touched.iter().map(|&j| (j, scratch[j])).collect();
            for &j in &touched {
                scratch[j] = 0.0;
            }
            touched.clear();
            rows.push(row);
        }
        Ok(TransitionOperator { root, rows })
    }

    pub fn stationary_from(&self, root: usize, config: &WalkConfig) -> Result<StationaryDistribution> {
        let t = self.transition(root, config)?;
        stationary(&t, config.tolerance, config.max_iterations)
    }
}

/// Sparse row-stochastic transition matrix of a rooted walk.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionOperator {
    root: usize,
    rows: Vec<Vec<(usize, f64)>>,
}

impl TransitionOperator {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Non-zero entries of row `i`, sorted by column.
    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.rows[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.rows[i][k].1)
            .unwrap_or(0.0)
    }

    /// `out = pi * T`.
    pub fn apply(&self, pi: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|x| *x = 0.0);
        for (c, row) in self.rows.iter().enumerate() {
            let mass = pi[c];
            if mass == 0.0 {
                continue;
            }
            for &(j, t) in row {
                out[j] += mass * t;
            }
        }
    }
}

pub fn hybrid_transition(graph: &LayeredGraph, root: &Node, config: &WalkConfig) -> Result<TransitionOperator> {
    let engine = WalkEngine::new(graph);
    let r = engine.root_index(root)?;
    engine.transition(r, config)
}

/// Power iteration from the uniform distribution until the L1 change between
/// iterates drops below `tolerance`.
pub fn stationary(t: &TransitionOperator, tolerance: f64, max_iterations: usize) -> Result<StationaryDistribution> {
    let n = t.len();
    if n == 0 {
        return Ok(StationaryDistribution(Vec::new()));
    }
    let mut pi = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..max_iterations {
        t.apply(&pi, &mut next);
        residual = pi.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut pi, &mut next);
        if residual < tolerance {
            let total: f64 = pi.iter().sum();
            pi.iter_mut().for_each(|x| *x /= total);
            return Ok(StationaryDistribution(pi));
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iterations,
        residual,
        last: Box::new(StationaryDistribution(pi)),
    })
}

/// Stationary probability of each target under the walk rooted at `root`.
pub fn hrpr_score(
    graph: &LayeredGraph,
    root: &Node,
    targets: &[Node],
    config: &WalkConfig,
) -> Result<BTreeMap<Node, f64>> {
    let engine = WalkEngine::new(graph);
    let r = engine.root_index(root)?;
    let indices = targets
        .iter()
        .map(|t| {
            graph
                .index_of(t)
                .ok_or_else(|| Error::validation(format!("target {t} is not a node of the graph")))
        })
        .collect::<Result<Vec<_>>>()?;
    let pi = engine.stationary_from(r, config)?;
    Ok(targets
        .iter()
        .cloned()
        .zip(indices.into_iter().map(|i| pi.get(i)))
        .collect())
}
