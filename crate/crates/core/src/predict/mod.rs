//! Attendance predictors. Every predictor yields one [`Decision`] per
//! attendance record: the participant chooses among the talks running in
//! parallel at that moment, and the predictor scores each of them.

mod baselines;
mod cosine;
mod hrpr;
mod sweep;

use serde::Serialize;

pub use baselines::{baseline_majority, baseline_room};
pub use cosine::{cosine_predict, CosineMode};
pub use hrpr::{hrpr_predict, HrprContext, Population};
pub use sweep::{simplex_grid, sweep, SweepPoint};

use crate::dataset::{Dataset, Schedule, TalkTime};
use crate::error::{Error, Result};

/// One prediction for one participant at one talk time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decision {
    pub participant: String,
    pub slot: String,
    pub position: usize,
    /// Parallel talks at this time, in session order.
    pub candidates: Vec<String>,
    /// Raw predictor scores aligned with `candidates`.
    pub scores: Vec<f64>,
    /// Scores divided by their sum, or all 0 when the sum is 0.
    pub normalized: Vec<f64>,
    pub predicted: String,
    pub attended: String,
    /// More than one candidate shares the top score.
    pub tie: bool,
}

impl Decision {
    /// Picks the highest-scoring candidate; ties go to the smallest talk id.
    pub fn new(
        participant: impl Into<String>,
        time: &TalkTime,
        candidates: Vec<String>,
        scores: Vec<f64>,
        attended: impl Into<String>,
    ) -> Result<Self> {
        let attended = attended.into();
        if candidates.is_empty() || candidates.len() != scores.len() {
            return Err(Error::validation(format!(
                "decision at {}#{} has {} candidates and {} scores",
                time.slot,
                time.position,
                candidates.len(),
                scores.len()
            )));
        }
        if scores.iter().any(|s| !s.is_finite() || *s < 0.0) {
            return Err(Error::validation(format!("scores {scores:?} must be finite and non-negative")));
        }
        if !candidates.contains(&attended) {
            return Err(Error::validation(format!(
                "attended talk '{attended}' is not a candidate at {}#{}",
                time.slot, time.position
            )));
        }
        let best = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let top: Vec<&String> = candidates
            .iter()
            .zip(&scores)
            .filter(|(_, &s)| s == best)
            .map(|(c, _)| c)
            .collect();
        let predicted = (*top.iter().min().expect("at least one candidate")).clone();
        let tie = top.len() > 1;
        let sum: f64 = scores.iter().sum();
        let normalized = scores
            .iter()
            .map(|s| if sum > 0.0 { s / sum } else { 0.0 })
            .collect();
        Ok(Decision {
            participant: participant.into(),
            slot: time.slot.clone(),
            position: time.position,
            candidates,
            scores,
            normalized,
            predicted,
            attended,
            tie,
        })
    }

    pub fn correct(&self) -> bool {
        self.predicted == self.attended
    }

    pub fn talk_time(&self) -> TalkTime {
        TalkTime {
            slot: self.slot.clone(),
            position: self.position,
        }
    }

    pub fn raw_score(&self, talk: &str) -> Option<f64> {
        self.candidates.iter().position(|c| c == talk).map(|i| self.scores[i])
    }
}

/// A participant's attended talk at one talk time: the unit a predictor decides on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionUnit {
    pub participant: String,
    pub time: TalkTime,
    pub attended: String,
}

/// All decision units of a dataset in chronological order, then by participant.
pub fn decision_units(dataset: &Dataset) -> Vec<DecisionUnit> {
    let schedule = &dataset.schedule;
    let mut units: Vec<DecisionUnit> = dataset
        .attendance
        .entries()
        .map(|(p, time, talk)| DecisionUnit {
            participant: p.to_string(),
            time: time.clone(),
            attended: talk.to_string(),
        })
        .collect();
    units.sort_by(|a, b| {
        (slot_rank(schedule, &a.time.slot), a.time.position, &a.participant).cmp(&(
            slot_rank(schedule, &b.time.slot),
            b.time.position,
            &b.participant,
        ))
    });
    units
}

pub(crate) fn slot_rank(schedule: &Schedule, slot: &str) -> usize {
    schedule
        .slots()
        .iter()
        .position(|s| s.id == slot)
        .unwrap_or(usize::MAX)
}

pub(crate) fn candidates_of(schedule: &Schedule, time: &TalkTime) -> Vec<String> {
    schedule.candidates(time).into_iter().map(str::to_string).collect()
}
