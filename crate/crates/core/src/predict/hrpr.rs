use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{candidates_of, decision_units, Decision, DecisionUnit};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::graphs::{build_slot_graph, merge_sessions, LayeredGraph, Node, SessionMerge, WeightMode};
use crate::text::VectorSpace;
use crate::walk::{StationaryDistribution, WalkConfig, WalkEngine};

/// Which participants a predictor is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Population {
    /// Participants with an interest profile.
    Core,
    All,
    /// `Core` when the cosine layer carries weight, else `All`.
    Auto,
}

impl Population {
    pub fn resolve(self, p_cosine: f64) -> Population {
        match self {
            Population::Auto if p_cosine > 0.0 => Population::Core,
            Population::Auto => Population::All,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Population::Core => "core",
            Population::All => "all",
            Population::Auto => "auto",
        }
    }
}

struct SlotGraphs {
    graph: LayeredGraph,
    merged: SessionMerge,
}

/// Slot graphs built once and reused across mixtures.
pub struct HrprContext<'d> {
    dataset: &'d Dataset,
    slots: BTreeMap<String, SlotGraphs>,
    units: Vec<DecisionUnit>,
    core: Option<BTreeSet<String>>,
}

impl<'d> HrprContext<'d> {
    pub fn new(dataset: &'d Dataset, space: Option<&VectorSpace>, mode: WeightMode) -> Result<Self> {
        let slots = dataset
            .schedule
            .slots()
            .iter()
            .map(|s| {
                let graph = build_slot_graph(dataset, space, &s.id, mode)?;
                let merged = merge_sessions(&graph, &dataset.schedule)?;
                Ok((s.id.clone(), SlotGraphs { graph, merged }))
            })
            .collect::<Result<_>>()?;
        Ok(HrprContext {
            dataset,
            slots,
            units: decision_units(dataset),
            core: space.map(|s| s.profiles.keys().cloned().collect()),
        })
    }

    pub fn graph(&self, slot: &str) -> Option<&LayeredGraph> {
        self.slots.get(slot).map(|s| &s.graph)
    }

    pub fn merged(&self, slot: &str) -> Option<&SessionMerge> {
        self.slots.get(slot).map(|s| &s.merged)
    }

    /// Scores every candidate by the stationary probability of its talk node
    /// (or, when `merged`, its session node) in the walk rooted at the participant.
    pub fn predict(&self, config: &WalkConfig, merged: bool, population: Population) -> Result<Vec<Decision>> {
        let population = population.resolve(config.mixture.first().copied().unwrap_or(0.0));
        let keep = |p: &str| match population {
            Population::Core => self.core.as_ref().is_some_and(|c| c.contains(p)),
            _ => true,
        };
        if population == Population::Core && self.core.is_none() {
            return Err(Error::config("the core population needs an interest corpus"));
        }
        let units: Vec<&DecisionUnit> = self.units.iter().filter(|u| keep(&u.participant)).collect();
        let roots: BTreeSet<(&str, &str)> = units
            .iter()
            .map(|u| (u.time.slot.as_str(), u.participant.as_str()))
            .collect();
        let graph_of = |slot: &str| {
            let s = &self.slots[slot];
            if merged {
                &s.merged.graph
            } else {
                &s.graph
            }
        };
        let engines: BTreeMap<&str, WalkEngine<'_>> = self
            .slots
            .keys()
            .map(|k| (k.as_str(), WalkEngine::new(graph_of(k))))
            .collect();
        let roots: Vec<(&str, &str)> = roots.into_iter().collect();
        let distributions: BTreeMap<(&str, &str), StationaryDistribution> = roots
            .par_iter()
            .map(|&(slot, p)| {
                let engine = &engines[slot];
                let r = engine.root_index(&Node::participant(p))?;
                Ok(((slot, p), engine.stationary_from(r, config)?))
            })
            .collect::<Result<_>>()?;

        units
            .into_iter()
            .map(|u| {
                let slot = u.time.slot.as_str();
                let pi = &distributions[&(slot, u.participant.as_str())];
                let graph = graph_of(slot);
                let candidates = candidates_of(&self.dataset.schedule, &u.time);
                let scores = candidates
                    .iter()
                    .map(|t| {
                        let talk = Node::talk(t.as_str());
                        let node = if merged {
                            self.slots[slot].merged.node_for(&talk).cloned().unwrap_or(talk)
                        } else {
                            talk
                        };
                        let i = graph.index_of(&node).expect("slot talks are graph nodes");
                        pi.get(i)
                    })
                    .collect();
                Decision::new(u.participant.clone(), &u.time, candidates, scores, u.attended.clone())
            })
            .collect()
    }
}

/// Builds the slot graphs and runs one hybrid walk prediction.
pub fn hrpr_predict(
    dataset: &Dataset,
    space: Option<&VectorSpace>,
    config: &WalkConfig,
    merged: bool,
    mode: WeightMode,
    population: Population,
) -> Result<Vec<Decision>> {
    HrprContext::new(dataset, space, mode)?.predict(config, merged, population)
}
