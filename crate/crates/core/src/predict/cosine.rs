use std::str::FromStr;

use super::{candidates_of, decision_units, Decision};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::text::{cosine, VectorSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosineMode {
    /// Compare the parallel talks directly.
    TalkWise,
    /// Compare sessions by their best-matching talk.
    SessionMax,
    /// Compare sessions by mean talk similarity.
    SessionAvg,
}

impl CosineMode {
    pub const ALL: [CosineMode; 3] = [CosineMode::TalkWise, CosineMode::SessionMax, CosineMode::SessionAvg];

    pub fn name(self) -> &'static str {
        match self {
            CosineMode::TalkWise => "talk-wise",
            CosineMode::SessionMax => "session-max",
            CosineMode::SessionAvg => "session-avg",
        }
    }
}

impl FromStr for CosineMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CosineMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::config(format!("unknown cosine mode '{s}'")))
    }
}

/// Cosine predictor over participants that have an interest profile.
///
/// In the session modes each candidate talk carries its session's aggregate
/// score, so the chosen session decides every position of the slot.
pub fn cosine_predict(dataset: &Dataset, space: &VectorSpace, mode: CosineMode) -> Result<Vec<Decision>> {
    let schedule = &dataset.schedule;
    let talk_vector = |t: &str| {
        space
            .talks
            .get(t)
            .ok_or_else(|| Error::validation(format!("no vector for talk '{t}'")))
    };
    let mut out = Vec::new();
    for u in decision_units(dataset) {
        let Some(profile) = space.profiles.get(&u.participant) else {
            continue;
        };
        let candidates = candidates_of(schedule, &u.time);
        let scores = candidates
            .iter()
            .map(|t| {
                if mode == CosineMode::TalkWise {
                    return Ok(cosine(profile, talk_vector(t)?));
                }
                let session_id = &schedule.talk(t).expect("candidate talk exists").session;
                let session = schedule.session(session_id).expect("talk session exists");
                let sims = session
                    .talks
                    .iter()
                    .map(|s| Ok(cosine(profile, talk_vector(s)?)))
                    .collect::<Result<Vec<f64>>>()?;
                Ok(match mode {
                    CosineMode::SessionMax => sims.iter().copied().fold(0.0, f64::max),
                    _ => sims.iter().sum::<f64>() / sims.len() as f64,
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        out.push(Decision::new(u.participant, &u.time, candidates, scores, u.attended)?);
    }
    Ok(out)
}
