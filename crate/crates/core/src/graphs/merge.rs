use std::collections::BTreeMap;

use super::{Layer, LayeredGraph, Node};
use crate::dataset::Schedule;
use crate::error::{Error, Result};

/// A graph whose talk nodes have been collapsed into one node per session.
#[derive(Debug, Clone, PartialEq)]
pub struct SessionMerge {
    /// Talk node to its session supernode.
    pub mapping: BTreeMap<Node, Node>,
    pub graph: LayeredGraph,
}

impl SessionMerge {
    /// The node carrying a talk's score after merging.
    pub fn node_for(&self, talk: &Node) -> Option<&Node> {
        self.mapping.get(talk)
    }
}

/// Sums raw edge weights into session supernodes, layer by layer. Edges
/// between talks of the same session become self-loops and are dropped; the
/// walk's row normalisation renormalises the summed weights.
pub fn merge_sessions(graph: &LayeredGraph, schedule: &Schedule) -> Result<SessionMerge> {
    let mut mapping = BTreeMap::new();
    for node in graph.nodes() {
        if let Node::Talk(t) = node {
            let talk = schedule
                .talk(t)
                .ok_or_else(|| Error::validation(format!("talk '{t}' is not in any session")))?;
            mapping.insert(node.clone(), Node::Session(talk.session.clone()));
        }
    }
    let map = |n: &Node| mapping.get(n).cloned().unwrap_or_else(|| n.clone());

    let layers = graph
        .layers()
        .iter()
        .map(|layer| {
            let mut merged = Layer::new(layer.kind);
            for (a, b, w) in layer.edges() {
                let (ma, mb) = (map(a), map(b));
                if ma != mb {
                    merged.add_directed(ma, mb, w);
                }
            }
            merged
        })
        .collect();
    let nodes: Vec<Node> = graph.nodes().iter().map(map).collect();
    let merged = LayeredGraph::new(graph.slot.clone(), nodes, layers)?;
    Ok(SessionMerge {
        mapping,
        graph: merged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::fixtures::small_schedule;
    use crate::graphs::LayerKind;

    fn p(s: &str) -> Node {
        Node::participant(s)
    }

    fn t(s: &str) -> Node {
        Node::talk(s)
    }

    #[test]
    fn sums_weights_into_supernode() {
        let s = small_schedule();
        let mut cos = Layer::new(LayerKind::Cosine);
        cos.add_directed(p("x"), t("s1at1"), 0.3);
        cos.add_directed(p("x"), t("s1at2"), 0.2);
        cos.add_directed(p("x"), p("q"), 0.5);
        let mut pres = Layer::new(LayerKind::Presenter);
        pres.add_undirected(t("s1at1"), t("s1at2"), 7.0);
        pres.add_undirected(t("s1at1"), t("s1bt1"), 3.0);
        let nodes = [p("x"), p("q"), t("s1at1"), t("s1at2"), t("s1bt1"), t("s1bt2")];
        let g = LayeredGraph::new("s1", nodes, vec![cos, pres]).unwrap();
        let m = merge_sessions(&g, &s).unwrap();

        let sa = Node::Session("s1a".into());
        let sb = Node::Session("s1b".into());
        let cos = &m.graph.layers()[0];
        assert!((cos.weight(&p("x"), &sa) - 0.5).abs() < 1e-15);
        assert_eq!(cos.weight(&p("x"), &p("q")), 0.5);
        let pres = &m.graph.layers()[1];
        assert_eq!(pres.weight(&sa, &sa), 0.0);
        assert_eq!(pres.weight(&sa, &sb), 3.0);
        assert_eq!(pres.weight(&sb, &sa), 3.0);
        assert_eq!(m.graph.nodes().len(), 4);
        assert_eq!(m.node_for(&t("s1bt2")), Some(&sb));
    }

    #[test]
    fn unknown_talk_is_an_error() {
        let s = small_schedule();
        let g = LayeredGraph::new("s1", [t("nowhere")], vec![]).unwrap();
        assert!(merge_sessions(&g, &s).is_err());
    }
}
