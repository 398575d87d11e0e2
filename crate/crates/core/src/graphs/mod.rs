//! Per-slot layered interaction graphs.
//!
//! A slot graph holds every participant plus the talks of that slot, with
//! three weighted layers in fixed order: cosine (participant to talk, by
//! interest similarity), coffee break (participant to participant, contact
//! seconds during the break before the slot) and presenter (contacts with a
//! slot presenter before the slot starts, attached to that presenter's talk).

mod merge;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

pub use merge::{merge_sessions, SessionMerge};

use crate::dataset::{ContactLog, Dataset, Schedule};
use crate::error::{Error, Result};
use crate::text::{cosine, VectorSpace};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Participant(String),
    Talk(String),
    /// All talks of one session collapsed into a single node.
    Session(String),
}

impl Node {
    pub fn participant(id: impl Into<String>) -> Self {
        Node::Participant(id.into())
    }

    pub fn talk(id: impl Into<String>) -> Self {
        Node::Talk(id.into())
    }

    pub fn id(&self) -> &str {
        match self {
            Node::Participant(s) | Node::Talk(s) | Node::Session(s) => s,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Participant(s) => write!(f, "p:{s}"),
            Node::Talk(s) => write!(f, "t:{s}"),
            Node::Session(s) => write!(f, "s:{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayerKind {
    Cosine,
    Break,
    Presenter,
}

impl LayerKind {
    pub fn name(self) -> &'static str {
        match self {
            LayerKind::Cosine => "cosine",
            LayerKind::Break => "break",
            LayerKind::Presenter => "presenter",
        }
    }
}

/// How contact-derived layers are weighted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    /// Total contact seconds.
    #[default]
    Duration,
    /// 1 for every pair with any contact.
    Binary,
}

impl std::str::FromStr for WeightMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "duration" => Ok(WeightMode::Duration),
            "binary" => Ok(WeightMode::Binary),
            other => Err(Error::config(format!("unknown weight mode '{other}'"))),
        }
    }
}

/// Directed weighted adjacency. Undirected edges are stored in both directions.
#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    pub kind: LayerKind,
    edges: BTreeMap<Node, BTreeMap<Node, f64>>,
}

impl Layer {
    pub fn new(kind: LayerKind) -> Self {
        Layer {
            kind,
            edges: BTreeMap::new(),
        }
    }

    /// Adds `w` to the edge `from -> to`. Non-positive weights are ignored.
    pub fn add_directed(&mut self, from: Node, to: Node, w: f64) {
        debug_assert!(w.is_finite(), "edge weight {w}");
        if w > 0.0 {
            *self.edges.entry(from).or_default().entry(to).or_insert(0.0) += w;
        }
    }

    pub fn add_undirected(&mut self, a: Node, b: Node, w: f64) {
        self.add_directed(a.clone(), b.clone(), w);
        self.add_directed(b, a, w);
    }

    pub fn out_edges(&self, node: &Node) -> impl Iterator<Item = (&Node, f64)> {
        self.edges
            .get(node)
            .into_iter()
            .flat_map(|m| m.iter().map(|(n, w)| (n, *w)))
    }

    pub fn out_weight(&self, node: &Node) -> f64 {
        self.out_edges(node).map(|(_, w)| w).sum()
    }

    pub fn weight(&self, from: &Node, to: &Node) -> f64 {
        self.edges
            .get(from)
            .and_then(|m| m.get(to))
            .copied()
            .unwrap_or(0.0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Node, &Node, f64)> {
        self.edges
            .iter()
            .flat_map(|(a, m)| m.iter().map(move |(b, w)| (a, b, *w)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn binarize(&mut self) {
        for m in self.edges.values_mut() {
            m.values_mut().for_each(|w| *w = 1.0);
        }
    }
}

/// One node set with several edge layers.
#[derive(Debug, Clone, PartialEq)]
pub struct LayeredGraph {
    pub slot: String,
    nodes: Vec<Node>,
    layers: Vec<Layer>,
}

impl LayeredGraph {
    /// Nodes are sorted and deduplicated; every edge endpoint must be a node
    /// and every weight finite and positive.
    pub fn new(slot: impl Into<String>, nodes: impl IntoIterator<Item = Node>, layers: Vec<Layer>) -> Result<Self> {
        let nodes: Vec<Node> = nodes.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for layer in &layers {
            for (a, b, w) in layer.edges() {
                for n in [a, b] {
                    if nodes.binary_search(n).is_err() {
                        return Err(Error::validation(format!(
                            "{} layer edge {a} -> {b} uses unknown node {n}",
                            layer.kind.name()
                        )));
                    }
                }
                if !(w.is_finite() && w > 0.0) {
                    return Err(Error::validation(format!(
                        "{} layer edge {a} -> {b} has weight {w}",
                        layer.kind.name()
                    )));
                }
            }
        }
        Ok(LayeredGraph {
            slot: slot.into(),
            nodes,
            layers,
        })
    }

    /// Sorted node list; positions are the node indices used by the walk.
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn index_of(&self, node: &Node) -> Option<usize> {
        self.nodes.binary_search(node).ok()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layer(&self, kind: LayerKind) -> Option<&Layer> {
        self.layers.iter().find(|l| l.kind == kind)
    }
}

pub fn build_cosine_layer(space: &VectorSpace, schedule: &Schedule, slot: &str) -> Layer {
    let mut layer = Layer::new(LayerKind::Cosine);
    let talks = schedule.slot_talks(slot);
    for (p, profile) in &space.profiles {
        for t in &talks {
            if let Some(v) = space.talks.get(*t) {
                layer.add_directed(Node::participant(p.as_str()), Node::talk(*t), cosine(profile, v));
            }
        }
    }
    layer
}

/// Participant pairs weighted by contact seconds overlapping the break before the slot.
pub fn build_break_layer(contacts: &ContactLog, schedule: &Schedule, slot: &str, mode: WeightMode) -> Layer {
    let mut layer = Layer::new(LayerKind::Break);
    if let Some(window) = schedule.break_before(slot) {
        for c in contacts.intervals() {
            let overlap = crate::dataset::Interval {
                start: c.start,
                end: c.end,
            }
            .overlap(&window);
            layer.add_undirected(Node::participant(c.u.as_str()), Node::participant(c.v.as_str()), overlap as f64);
        }
    }
    if mode == WeightMode::Binary {
        layer.binarize();
    }
    layer
}

/// Contacts that ended before the slot starts and involve a presenter of one
/// of its talks. The presenter is represented by the talk node, so a contact
/// between two slot presenters links their talks.
pub fn build_presenter_layer(contacts: &ContactLog, schedule: &Schedule, slot: &str, mode: WeightMode) -> Layer {
    let mut layer = Layer::new(LayerKind::Presenter);
    let Some(start) = schedule.slot(slot).map(|s| s.start) else {
        return layer;
    };
    let mut presented: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for t in schedule.slot_talks(slot) {
        presented.entry(schedule.talks()[t].presenter.as_str()).or_default().push(t);
    }
    let as_nodes = |p: &str| -> Vec<Node> {
        match presented.get(p) {
            Some(talks) => talks.iter().map(|t| Node::talk(*t)).collect(),
            None => vec![Node::participant(p)],
        }
    };
    for c in contacts.intervals().iter().filter(|c| c.end < start) {
        if !presented.contains_key(c.u.as_str()) && !presented.contains_key(c.v.as_str()) {
            continue;
        }
        let w = c.duration() as f64;
        for a in as_nodes(&c.u) {
            for b in as_nodes(&c.v) {
                if a != b {
                    layer.add_undirected(a.clone(), b, w);
                }
            }
        }
    }
    if mode == WeightMode::Binary {
        layer.binarize();
    }
    layer
}

/// The three-layer graph of one slot over all participants and the slot's talks.
/// Without a vector space the cosine layer is empty.
pub fn build_slot_graph(
    dataset: &Dataset,
    space: Option<&VectorSpace>,
    slot: &str,
    mode: WeightMode,
) -> Result<LayeredGraph> {
    if dataset.schedule.slot(slot).is_none() {
        return Err(Error::validation(format!("unknown slot '{slot}'")));
    }
    let nodes = dataset
        .participants()
        .into_iter()
        .map(Node::Participant)
        .chain(dataset.schedule.slot_talks(slot).into_iter().map(Node::talk));
    let cosine_layer = match space {
        Some(space) => build_cosine_layer(space, &dataset.schedule, slot),
        None => Layer::new(LayerKind::Cosine),
    };
    let layers = vec![
        cosine_layer,
        build_break_layer(&dataset.contacts, &dataset.schedule, slot, mode),
        build_presenter_layer(&dataset.contacts, &dataset.schedule, slot, mode),
    ];
    LayeredGraph::new(slot, nodes, layers)
}

/// Flat edge list for `edges.csv`: (slot, layer, src, dst, weight).
pub fn edge_rows(graph: &LayeredGraph) -> Vec<(String, &'static str, String, String, f64)> {
    graph
        .layers()
        .iter()
        .flat_map(|l| {
            l.edges()
                .map(move |(a, b, w)| (graph.slot.clone(), l.kind.name(), a.to_string(), b.to_string(), w))
        })
        .collect()
}
