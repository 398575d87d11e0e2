use std::collections::BTreeMap;

use serde::Serialize;

use super::Proportion;
use crate::dataset::{pair_key, Contact, Dataset, Interval};
use crate::error::{Error, Result};

/// Presenter-curve thresholds in seconds: 20 doubling up to 1280.
pub const DEFAULT_PRESENTER_THRESHOLDS: [i64; 7] = [20, 40, 80, 160, 320, 640, 1280];

/// Conditioning events for the same-talk probability of a participant pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InfluenceCategory {
    /// Met during the break right before the slot.
    CoffeeBreak,
    /// Met at any time before the slot starts.
    PriorContact,
    /// Met at some point of the conference.
    ContactByEnd,
    /// Never met.
    NoContact,
}

impl InfluenceCategory {
    pub const ALL: [InfluenceCategory; 4] = [
        InfluenceCategory::CoffeeBreak,
        InfluenceCategory::PriorContact,
        InfluenceCategory::ContactByEnd,
        InfluenceCategory::NoContact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InfluenceCategory::CoffeeBreak => "coffee_break",
            InfluenceCategory::PriorContact => "prior_contact",
            InfluenceCategory::ContactByEnd => "contact_by_end",
            InfluenceCategory::NoContact => "no_contact",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfluenceReport {
    pub same_talk: Vec<(InfluenceCategory, Proportion)>,
    /// (minimum aggregated contact seconds, probability of joining the presenter's talk)
    pub presenter_curve: Vec<(i64, Proportion)>,
}

/// Probability that two participants attending the same talk time chose the
/// same talk, per contact category. Pairs are unordered; every talk time
/// both attend counts once.
pub fn influence_same_talk(dataset: &Dataset) -> Vec<(InfluenceCategory, Proportion)> {
    let mut by_pair: BTreeMap<(&str, &str), Vec<&Contact>> = BTreeMap::new();
    for c in dataset.contacts.intervals() {
        by_pair.entry((c.u.as_str(), c.v.as_str())).or_default().push(c);
    }
    let mut attendees: BTreeMap<_, Vec<(&str, &str)>> = BTreeMap::new();
    for (p, time, talk) in dataset.attendance.entries() {
        attendees.entry(time.clone()).or_default().push((p, talk));
    }
    let mut tallies = [(0usize, 0usize); 4];
    for (time, people) in &attendees {
        let slot = dataset.schedule.slot(&time.slot).expect("attendance slot exists");
        let pause = dataset.schedule.break_before(&slot.id);
        for (i, &(a, ta)) in people.iter().enumerate() {
            for &(b, tb) in &people[i + 1..] {
                let key = pair_key(a, b);
                let contacts = by_pair.get(&key).map(Vec::as_slice).unwrap_or(&[]);
                let same = (ta == tb) as usize;
                let mut bump = |cat: InfluenceCategory| {
                    let t = &mut tallies[cat as usize];
                    t.0 += same;
                    t.1 += 1;
                };
                if contacts.is_empty() {
                    bump(InfluenceCategory::NoContact);
                    continue;
                }
                bump(InfluenceCategory::ContactByEnd);
                if contacts.iter().any(|c| c.end < slot.start) {
                    bump(InfluenceCategory::PriorContact);
                }
                let in_break = pause.is_some_and(|br: Interval| {
                    contacts.iter().any(|c| {
                        Interval {
                            start: c.start,
                            end: c.end,
                        }
                        .overlap(&br)
                            > 0
                    })
                });
                if in_break {
                    bump(InfluenceCategory::CoffeeBreak);
                }
            }
        }
    }
    InfluenceCategory::ALL
        .into_iter()
        .map(|c| {
            let (s, n) = tallies[c as usize];
            (c, Proportion::new(s, n))
        })
        .collect()
}

/// For each threshold, the probability that a participant attends a talk
/// given at least that many seconds of contact with its presenter before the
/// slot. Only participants attending some talk at the same time count.
pub fn influence_presenter(dataset: &Dataset, thresholds: &[i64]) -> Result<Vec<(i64, Proportion)>> {
    if thresholds.iter().any(|&t| t < 20) || thresholds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::config(format!(
            "presenter thresholds {thresholds:?} must be at least 20 s and strictly increasing"
        )));
    }
    let schedule = &dataset.schedule;
    let mut attendees: BTreeMap<_, Vec<(&str, &str)>> = BTreeMap::new();
    for (p, time, talk) in dataset.attendance.entries() {
        attendees.entry(time.clone()).or_default().push((p, talk));
    }
    // (contact seconds, attended) per qualifying (participant, talk)
    let mut cases: Vec<(i64, bool)> = Vec::new();
    for slot in schedule.slots() {
        let before = dataset.contacts.aggregated_before(slot.start);
        for time in schedule.talk_times().into_iter().filter(|t| t.slot == slot.id) {
            let Some(people) = attendees.get(&time) else {
                continue;
            };
            for talk in schedule.candidates(&time) {
                let presenter = schedule.talk(talk).expect("candidate talk exists").presenter.as_str();
                for &(q, attended) in people {
                    if q == presenter {
                        continue;
                    }
                    let key = pair_key(q, presenter);
                    if let Some(&secs) = before.get(&key) {
                        cases.push((secs, attended == talk));
                    }
                }
            }
        }
    }
    Ok(thresholds
        .iter()
        .map(|&theta| {
            let hits = cases.iter().filter(|(s, _)| *s >= theta);
            let n = hits.clone().count();
            let s = hits.filter(|(_, a)| *a).count();
            (theta, Proportion::new(s, n))
        })
        .collect())
}
