//! Helpers shared by the integration tests: seeded random layered graphs and
//! an independent dense solver for the rooted hybrid walk.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use talkwalk::graphs::{Layer, LayerKind, LayeredGraph, Node};

pub const KINDS: [LayerKind; 3] = [LayerKind::Cosine, LayerKind::Break, LayerKind::Presenter];

pub fn node(i: usize) -> Node {
    Node::participant(format!("n{i:02}"))
}

/// Directed graph with `n` nodes and `layers` layers. Each ordered pair gets
/// an edge with probability `density`. Integer weights keep sums exact.
pub fn random_graph(rng: &mut impl Rng, n: usize, layers: usize, density: f64, integer_weights: bool) -> LayeredGraph {
    let layers = (0..layers)
        .map(|k| {
            let mut layer = Layer::new(KINDS[k]);
            for a in 0..n {
                for b in 0..n {
                    if a != b && rng.gen_bool(density) {
                        let w = if integer_weights {
                            rng.gen_range(1..=50) as f64
                        } else {
                            rng.gen_range(0.05..5.0)
                        };
                        layer.add_directed(node(a), node(b), w);
                    }
                }
            }
            layer
        })
        .collect();
    LayeredGraph::new("random", (0..n).map(node), layers).unwrap()
}

/// Random point of the probability simplex; each entry is zeroed with
/// probability 1/4 (at least one stays positive).
pub fn random_mixture(rng: &mut impl Rng, k: usize) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..k)
            .map(|_| if rng.gen_bool(0.25) { 0.0 } else { rng.gen_range(0.01..1.0) })
            .collect();
        let s: f64 = raw.iter().sum();
        if s > 0.0 {
            return raw.into_iter().map(|x| x / s).collect();
        }
    }
}

/// Dense transition matrix written straight from the walk's definition,
/// reading edges only through the public layer API.
pub fn dense_transition(graph: &LayeredGraph, root: usize, alpha: f64, mixture: &[f64]) -> DMatrix<f64> {
    let nodes = graph.nodes();
    let n = nodes.len();
    let mut t = DMatrix::zeros(n, n);
    for (c, from) in nodes.iter().enumerate() {
        t[(c, root)] += alpha;
        for (layer, &p) in graph.layers().iter().zip(mixture) {
            let total: f64 = nodes.iter().map(|to| layer.weight(from, to)).sum();
            if total == 0.0 {
                t[(c, root)] += (1.0 - alpha) * p;
                continue;
            }
            for (j, to) in nodes.iter().enumerate() {
                t[(c, j)] += (1.0 - alpha) * p * layer.weight(from, to) / total;
            }
        }
    }
    t
}

/// Solves `pi T = pi`, `sum(pi) = 1` by LU on the transposed system with one
/// balance equation replaced by the normalisation.
pub fn dense_stationary(t: &DMatrix<f64>) -> Vec<f64> {
    let n = t.nrows();
    let mut a = DMatrix::<f64>::identity(n, n) - t.transpose();
    for j in 0..n {
        a[(n - 1, j)] = 1.0;
    }
    let mut b = DVector::zeros(n);
    b[n - 1] = 1.0;
    let x = a.lu().solve(&b).expect("restart makes the chain irreducible on its support");
    x.iter().copied().collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
