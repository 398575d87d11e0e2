use super::{candidates_of, decision_units, slot_rank, Decision};
use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// Predicts, for everyone, the talk whose track has the most accepted papers.
pub fn baseline_majority(dataset: &Dataset) -> Result<Vec<Decision>> {
    let schedule = &dataset.schedule;
    decision_units(dataset)
        .into_iter()
        .map(|u| {
            let candidates = candidates_of(schedule, &u.time);
            let scores = candidates
                .iter()
                .map(|t| {
                    let track = &schedule.talk(t).expect("candidate talk exists").track;
                    schedule
                        .tracks()
                        .get(track)
                        .map(|&n| n as f64)
                        .ok_or_else(|| Error::validation(format!("track '{track}' of talk '{t}' has no paper count")))
                })
                .collect::<Result<Vec<_>>>()?;
            Decision::new(u.participant, &u.time, candidates, scores, u.attended)
        })
        .collect()
}

/// Predicts the talk held in the room of the participant's first attended
/// talk. That first decision is not evaluated.
pub fn baseline_room(dataset: &Dataset) -> Result<Vec<Decision>> {
    let schedule = &dataset.schedule;
    let units = decision_units(dataset);
    let mut first_room = std::collections::BTreeMap::new();
    let mut first_unit = std::collections::BTreeSet::new();
    for (i, u) in units.iter().enumerate() {
        if !first_room.contains_key(&u.participant) {
            let session = &schedule.talk(&u.attended).expect("attended talk exists").session;
            let room = schedule.session(session).expect("talk session exists").room.clone();
            first_room.insert(u.participant.clone(), room);
            first_unit.insert(i);
        }
    }
    let mut out = Vec::new();
    for (i, u) in units.into_iter().enumerate() {
        if first_unit.contains(&i) {
            continue;
        }
        let room = &first_room[&u.participant];
        let candidates = candidates_of(schedule, &u.time);
        let scores: Vec<f64> = candidates
            .iter()
            .map(|t| {
                let session = &schedule.talk(t).expect("candidate talk exists").session;
                if &schedule.session(session).expect("talk session exists").room == room {
                    1.0
                } else {
                    0.0
                }
            })
            .collect();
        if !scores.contains(&1.0) {
            return Err(Error::validation(format!(
                "room '{room}' has no talk at slot '{}' position {} (participant '{}')",
                u.time.slot, u.time.position, u.participant
            )));
        }
        out.push(Decision::new(u.participant, &u.time, candidates, scores, u.attended)?);
    }
    debug_assert!(out.windows(2).all(|w| slot_rank(schedule, &w[0].slot) <= slot_rank(schedule, &w[1].slot)));
    Ok(out)
}
