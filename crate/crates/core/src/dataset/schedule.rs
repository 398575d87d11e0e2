use std::collections::{BTreeMap, BTreeSet};

use super::TalkTime;
use crate::error::{Error, Result};

/// Half-open time interval in epoch seconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub start: i64,
    pub end: i64,
}

impl Interval {
    pub fn duration(&self) -> i64 {
        self.end - self.start
    }

    /// Length of the intersection with `other`, zero when disjoint.
    pub fn overlap(&self, other: &Interval) -> i64 {
        (self.end.min(other.end) - self.start.max(other.start)).max(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeSlot {
    pub id: String,
    pub start: i64,
    pub end: i64,
    /// Parallel sessions, in listing order.
    pub sessions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Session {
    pub id: String,
    pub room: String,
    pub slot: String,
    /// Talks in presentation order.
    pub talks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Talk {
    pub id: String,
    pub title: String,
    pub abstract_text: String,
    pub fulltext: String,
    pub presenter: String,
    pub track: String,
    pub session: String,
}

/// Where a talk sits in the schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TalkPosition {
    pub slot: String,
    pub session: String,
    pub position: usize,
}

impl TalkPosition {
    pub fn talk_time(&self) -> TalkTime {
        TalkTime {
            slot: self.slot.clone(),
            position: self.position,
        }
    }
}

/// A validated conference schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    slots: Vec<TimeSlot>,
    sessions: BTreeMap<String, Session>,
    talks: BTreeMap<String, Talk>,
    tracks: BTreeMap<String, u32>,
    breaks: BTreeMap<String, Interval>,
    positions: BTreeMap<String, TalkPosition>,
}

impl Schedule {
    pub fn new(
        mut slots: Vec<TimeSlot>,
        sessions: Vec<Session>,
        talks: Vec<Talk>,
        tracks: BTreeMap<String, u32>,
        breaks: BTreeMap<String, Interval>,
    ) -> Result<Self> {
        slots.sort_by(|a, b| (a.start, &a.id).cmp(&(b.start, &b.id)));

        let mut slot_ids = BTreeSet::new();
        for s in &slots {
            if !slot_ids.insert(s.id.as_str()) {
                return Err(Error::validation(format!("duplicate slot '{}'", s.id)));
            }
            if s.start >= s.end {
                return Err(Error::validation(format!(
                    "slot '{}' has start {} not before end {}",
                    s.id, s.start, s.end
                )));
            }
            if s.sessions.len() < 2 {
                return Err(Error::validation(format!(
                    "slot '{}' needs at least two parallel sessions, found {}",
                    s.id,
                    s.sessions.len()
                )));
            }
        }
        for w in slots.windows(2) {
            if w[1].start < w[0].end {
                return Err(Error::validation(format!(
                    "slots '{}' and '{}' overlap",
                    w[0].id, w[1].id
                )));
            }
        }

        let mut session_map = BTreeMap::new();
        for s in sessions {
            if session_map.contains_key(&s.id) {
                return Err(Error::validation(format!("duplicate session '{}'", s.id)));
            }
            session_map.insert(s.id.clone(), s);
        }
        let mut talk_map = BTreeMap::new();
        for t in talks {
            if talk_map.contains_key(&t.id) {
                return Err(Error::validation(format!("duplicate talk '{}'", t.id)));
            }
            talk_map.insert(t.id.clone(), t);
        }

        let mut session_owner: BTreeMap<&str, &str> = BTreeMap::new();
        for slot in &slots {
            let mut rooms = BTreeSet::new();
            for sid in &slot.sessions {
                let sess = session_map.get(sid).ok_or_else(|| {
                    Error::validation(format!("slot '{}' lists unknown session '{sid}'", slot.id))
                })?;
                if sess.slot != slot.id {
                    return Err(Error::validation(format!(
                        "session '{sid}' is listed in slot '{}' but declares slot '{}'",
                        slot.id, sess.slot
                    )));
                }
                if let Some(prev) = session_owner.insert(sid, &slot.id) {
                    return Err(Error::validation(format!(
                        "session '{sid}' belongs to both slot '{prev}' and slot '{}'",
                        slot.id
                    )));
                }
                if !rooms.insert(sess.room.as_str()) {
                    return Err(Error::validation(format!(
                        "slot '{}' has two sessions in room '{}'",
                        slot.id, sess.room
                    )));
                }
            }
        }

        let mut positions = BTreeMap::new();
        for sess in session_map.values() {
            if !session_owner.contains_key(sess.id.as_str()) {
                return Err(Error::validation(format!(
                    "session '{}' is not listed by any slot",
                    sess.id
                )));
            }
            for (position, tid) in sess.talks.iter().enumerate() {
                let talk = talk_map.get(tid).ok_or_else(|| {
                    Error::validation(format!("session '{}' lists unknown talk '{tid}'", sess.id))
                })?;
                if talk.session != sess.id {
                    return Err(Error::validation(format!(
                        "talk '{tid}' is listed in session '{}' but declares session '{}'",
                        sess.id, talk.session
                    )));
                }
                let pos = TalkPosition {
                    slot: sess.slot.clone(),
                    session: sess.id.clone(),
                    position,
                };
                if positions.insert(tid.clone(), pos).is_some() {
                    return Err(Error::validation(format!(
                        "talk '{tid}' appears more than once in the schedule"
                    )));
                }
            }
        }
        if let Some(t) = talk_map.keys().find(|t| !positions.contains_key(*t)) {
            return Err(Error::validation(format!("talk '{t}' is not listed by any session")));
        }

        for (slot_id, b) in &breaks {
            let slot = slots.iter().find(|s| &s.id == slot_id).ok_or_else(|| {
                Error::validation(format!("break references unknown slot '{slot_id}'"))
            })?;
            if b.start > b.end || b.end > slot.start {
                return Err(Error::validation(format!(
                    "break [{}, {}] for slot '{slot_id}' must end at or before the slot start {}",
                    b.start, b.end, slot.start
                )));
            }
        }

        Ok(Schedule {
            slots,
            sessions: session_map,
            talks: talk_map,
            tracks,
            breaks,
            positions,
        })
    }

    /// Slots ordered by start time.
    pub fn slots(&self) -> &[TimeSlot] {
        &self.slots
    }

    pub fn slot(&self, id: &str) -> Option<&TimeSlot> {
        self.slots.iter().find(|s| s.id == id)
    }

    pub fn sessions(&self) -> &BTreeMap<String, Session> {
        &self.sessions
    }

    pub fn session(&self, id: &str) -> Option<&Session> {
        self.sessions.get(id)
    }

    pub fn talks(&self) -> &BTreeMap<String, Talk> {
        &self.talks
    }

    pub fn talk(&self, id: &str) -> Option<&Talk> {
        self.talks.get(id)
    }

    pub fn tracks(&self) -> &BTreeMap<String, u32> {
        &self.tracks
    }

    pub fn breaks(&self) -> &BTreeMap<String, Interval> {
        &self.breaks
    }

    /// The coffee break preceding a slot, if one is scheduled.
    pub fn break_before(&self, slot: &str) -> Option<Interval> {
        self.breaks.get(slot).copied()
    }

    pub fn talk_position(&self, talk: &str) -> Option<&TalkPosition> {
        self.positions.get(talk)
    }

    /// Number of talk positions in a slot (length of its longest session).
    pub fn position_count(&self, slot: &str) -> usize {
        self.slot(slot)
            .map(|s| {
                s.sessions
                    .iter()
                    .map(|sid| self.sessions[sid].talks.len())
                    .max()
                    .unwrap_or(0)
            })
            .unwrap_or(0)
    }

    /// Talks held in parallel at one position of a slot, in the slot's session order.
    pub fn candidates(&self, time: &TalkTime) -> Vec<&str> {
        let Some(slot) = self.slot(&time.slot) else {
            return Vec::new();
        };
        slot.sessions
            .iter()
            .filter_map(|sid| self.sessions[sid].talks.get(time.position))
            .map(String::as_str)
            .collect()
    }

    /// Every talk time, in chronological order.
    pub fn talk_times(&self) -> Vec<TalkTime> {
        self.slots
            .iter()
            .flat_map(|s| {
                (0..self.position_count(&s.id)).map(move |position| TalkTime {
                    slot: s.id.clone(),
                    position,
                })
            })
            .collect()
    }

    /// All talks of a slot across its parallel sessions.
    pub fn slot_talks(&self, slot: &str) -> Vec<&str> {
        self.slot(slot)
            .map(|s| {
                s.sessions
                    .iter()
                    .flat_map(|sid| self.sessions[sid].talks.iter().map(String::as_str))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn start(&self) -> Option<i64> {
        self.slots.first().map(|s| s.start)
    }

    pub fn end(&self) -> Option<i64> {
        self.slots.iter().map(|s| s.end).max()
    }
}
