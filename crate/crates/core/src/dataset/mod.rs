//! Conference data: schedule, attendance, contacts and publication corpus.
//!
//! A [`Schedule`] is organised as time slots, each holding two or more
//! parallel sessions in different rooms. Sessions are ordered blocks of
//! talks; the talks sharing a position across the parallel sessions of a slot
//! form one attendance decision (a participant can only sit in one of them).

mod contacts;
mod io;
mod schedule;
pub mod stats;
pub mod synth;

use std::collections::{BTreeMap, BTreeSet};

pub(crate) use contacts::pair_key;
pub use contacts::{Contact, ContactLog, DEFAULT_RESOLUTION};
pub use io::{load_dataset, save_dataset, DatasetPaths};
pub use schedule::{Interval, Schedule, Session, Talk, TalkPosition, TimeSlot};
pub use stats::{dataset_stats, SessionBehavior, StatsReport};
pub use synth::{generate_synthetic, PlantedTruth, SynthConfig, SynthOutput};

use crate::error::{Error, Result};

/// One talk attended by one participant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AttendanceRecord {
    pub participant: String,
    pub talk: String,
}

/// Identifies one attendance decision: a slot and a talk position within its sessions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TalkTime {
    pub slot: String,
    pub position: usize,
}

/// Ground-truth attendance, indexed by participant and talk time.
#[derive(Debug, Clone, PartialEq)]
pub struct AttendanceTable {
    records: Vec<AttendanceRecord>,
    index: BTreeMap<(String, TalkTime), String>,
}

impl AttendanceTable {
    /// Validates records against the schedule. Every talk must exist and a
    /// participant may attend at most one talk per talk time.
    pub fn new(records: Vec<AttendanceRecord>, schedule: &Schedule) -> Result<Self> {
        let mut index = BTreeMap::new();
        for rec in &records {
            let pos = schedule.talk_position(&rec.talk).ok_or_else(|| {
                Error::validation(format!(
                    "attendance record ({}, {}) references unknown talk '{}'",
                    rec.participant, rec.talk, rec.talk
                ))
            })?;
            let key = (rec.participant.clone(), pos.talk_time());
            if let Some(prev) = index.insert(key, rec.talk.clone()) {
                return Err(Error::validation(format!(
                    "participant '{}' attends both '{}' and '{}' in slot '{}' at position {}",
                    rec.participant, prev, rec.talk, pos.slot, pos.position
                )));
            }
        }
        let mut records = records;
        records.sort();
        Ok(AttendanceTable { records, index })
    }

    pub fn records(&self) -> &[AttendanceRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The talk a participant attended at a talk time, if any.
    pub fn attended(&self, participant: &str, time: &TalkTime) -> Option<&str> {
        // BTreeMap lookups need an owned key; these tables are small.
        self.index
            .get(&(participant.to_string(), time.clone()))
            .map(String::as_str)
    }

    /// All (participant, talk time, talk) triples, ordered by participant then time.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &TalkTime, &str)> {
        self.index
            .iter()
            .map(|((p, t), talk)| (p.as_str(), t, talk.as_str()))
    }

    pub fn participants(&self) -> BTreeSet<&str> {
        self.records.iter().map(|r| r.participant.as_str()).collect()
    }
}

/// A single prior publication of a participant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub text: String,
}

/// Prior publications per participant.
///
/// All documents are expected to predate the conference; `cutoff` records the
/// date the caller asserted (epoch seconds) and is not checked against the text.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Corpus {
    pub documents: BTreeMap<String, Vec<Document>>,
    pub cutoff: Option<i64>,
}

impl Corpus {
    pub fn document_count(&self, participant: &str) -> usize {
        self.documents.get(participant).map_or(0, Vec::len)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub schedule: Schedule,
    pub attendance: AttendanceTable,
    pub contacts: ContactLog,
    pub corpus: Corpus,
}

impl Dataset {
    /// Every participant id mentioned anywhere in the dataset.
    pub fn participants(&self) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = BTreeSet::new();
        out.extend(self.attendance.participants().into_iter().map(str::to_string));
        for c in self.contacts.intervals() {
            out.insert(c.u.clone());
            out.insert(c.v.clone());
        }
        out.extend(self.corpus.documents.keys().cloned());
        out.extend(self.schedule.talks().values().map(|t| t.presenter.clone()));
        out
    }
}
