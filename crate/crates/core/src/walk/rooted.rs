use super::StationaryDistribution;
use crate::error::{Error, Result};
use crate::graphs::{Layer, LayeredGraph, Node};

/// Rooted PageRank on one layer: the walker restarts with probability `alpha`,
/// otherwise moves to an out-neighbor chosen uniformly. Dead ends restart.
pub fn rooted_pagerank(
    graph: &LayeredGraph,
    layer: usize,
    root: &Node,
    alpha: f64,
    tolerance: f64,
    max_iterations: usize,
) -> Result<StationaryDistribution> {
    single_layer_walk(graph, layer, root, alpha, tolerance, max_iterations, false)
}

/// Like [`rooted_pagerank`] but neighbors are chosen proportionally to edge weight.
pub fn weighted_rooted_pagerank(
    graph: &LayeredGraph,
    layer: usize,
    root: &Node,
    alpha: f64,
    tolerance: f64,
    max_iterations: usize,
) -> Result<StationaryDistribution> {
    single_layer_walk(graph, layer, root, alpha, tolerance, max_iterations, true)
}

fn single_layer_walk(
    graph: &LayeredGraph,
    layer: usize,
    root: &Node,
    alpha: f64,
    tolerance: f64,
    max_iterations: usize,
    weighted: bool,
) -> Result<StationaryDistribution> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::config(format!("alpha {alpha} must lie in (0, 1)")));
    }
    let l: &Layer = graph
        .layers()
        .get(layer)
        .ok_or_else(|| Error::config(format!("graph has no layer {layer}")))?;
    let r = graph
        .index_of(root)
        .ok_or_else(|| Error::validation(format!("root {root} is not a node of the graph")))?;
    let nodes = graph.nodes();
    let n = nodes.len();
    let adjacency: Vec<Vec<(usize, f64)>> = nodes
        .iter()
        .map(|node| {
            l.out_edges(node)
                .map(|(m, w)| (graph.index_of(m).expect("validated endpoint"), if weighted { w } else { 1.0 }))
                .collect()
        })
        .collect();
    let mut pi = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..max_iterations {
        let mut next = vec![0.0; n];
        for (c, out) in adjacency.iter().enumerate() {
            next[r] += alpha * pi[c];
            if out.is_empty() {
                next[r] += (1.0 - alpha) * pi[c];
                continue;
            }
            let total: f64 = out.iter().map(|(_, w)| w).sum();
            for &(m, w) in out {
                next[m] += (1.0 - alpha) * pi[c] * w / total;
            }
        }
        residual = pi.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        pi = next;
        if residual < tolerance {
            return Ok(StationaryDistribution(pi));
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iterations,
        residual,
        last: Box::new(StationaryDistribution(pi)),
    })
}
