//! Seeded synthetic conferences with planted topics, used as test fixtures.
//!
//! Every participant has one primary topic. Parallel sessions of a slot get
//! distinct topics and their talks inherit them. Attendance at each talk time
//! is drawn with probability proportional to the participant's interest in
//! the talk's topic, where interest is `s` on the primary topic plus `(1 - s)`
//! spread uniformly over all topics. Coffee-break contacts are drawn per pair
//! with a rate that rises with `contact_homophily` for same-topic pairs.

use std::collections::{BTreeMap, BTreeSet};

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    AttendanceRecord, AttendanceTable, Contact, ContactLog, Corpus, Dataset, Document, Interval,
    Schedule, Session, Talk, TalkTime, TimeSlot, DEFAULT_RESOLUTION,
};
use crate::error::{Error, Result};

const CONFERENCE_START: i64 = 1_309_500_000;
const BREAK_SECONDS: i64 = 1_800;
const TALK_SECONDS: i64 = 1_800;
const TOPIC_WORDS: usize = 40;
const BACKGROUND_WORDS: usize = 60;
const BASE_CONTACT_RATE: f64 = 0.04;
const PRESENCE: f64 = 0.9;
const NO_PUBLICATIONS: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SynthConfig {
    pub participants: usize,
    pub slots: usize,
    /// Parallel sessions per slot, one per room.
    pub rooms: usize,
    pub talks_per_session: usize,
    pub topic_count: usize,
    pub interest_strength: f64,
    pub contact_homophily: f64,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            participants: 60,
            slots: 7,
            rooms: 2,
            talks_per_session: 3,
            topic_count: 2,
            interest_strength: 0.9,
            contact_homophily: 0.8,
            seed: 1,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<()> {
        if self.participants == 0 || self.slots == 0 || self.talks_per_session == 0 {
            return Err(Error::config("participants, slots and talks per session must be at least 1"));
        }
        if self.rooms < 2 {
            return Err(Error::config("a slot needs at least two rooms"));
        }
        if self.topic_count < self.rooms {
            return Err(Error::config(format!(
                "topic count {} is smaller than the number of rooms {}",
                self.topic_count, self.rooms
            )));
        }
        if self.participants < self.rooms {
            return Err(Error::config("need at least one presenter per room"));
        }
        for (name, v) in [
            ("interest strength", self.interest_strength),
            ("contact homophily", self.contact_homophily),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::config(format!("{name} {v} is outside [0, 1]")));
            }
        }
        Ok(())
    }
}

/// The generating parameters, emitted next to the dataset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlantedTruth {
    pub config: SynthConfig,
    pub participant_topics: BTreeMap<String, usize>,
    pub talk_topics: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthOutput {
    pub dataset: Dataset,
    pub truth: PlantedTruth,
}

/// A pronounceable word built only from letters that no Porter rule strips,
/// so generated vocabulary survives preprocessing unchanged.
pub fn synthetic_word(mut index: usize) -> String {
    const CONSONANTS: &[u8] = b"bdfgkmpvz";
    const VOWELS: &[u8] = b"aou";
    let mut w = String::new();
    for _ in 0..3 {
        w.push(CONSONANTS[index % CONSONANTS.len()] as char);
        index /= CONSONANTS.len();
        w.push(VOWELS[index % VOWELS.len()] as char);
        index /= VOWELS.len();
    }
    w.push(CONSONANTS[index % CONSONANTS.len()] as char);
    w
}

struct Vocabulary {
    topics: Vec<Vec<String>>,
    background: Vec<String>,
}

impl Vocabulary {
    fn new(topic_count: usize) -> Self {
        let topics = (0..topic_count)
            .map(|k| (0..TOPIC_WORDS).map(|j| synthetic_word(k * TOPIC_WORDS + j)).collect())
            .collect();
        let offset = topic_count * TOPIC_WORDS;
        let background = (0..BACKGROUND_WORDS).map(|j| synthetic_word(offset + j)).collect();
        Vocabulary { topics, background }
    }

    fn text(&self, rng: &mut ChaCha8Rng, topic: usize, words: usize, focus: f64) -> String {
        const FILLERS: &[&str] = &["the", "of", "and", "a", "in", "with", "for"];
        let mut out = Vec::with_capacity(words * 2);
        for _ in 0..words {
            if rng.gen_bool(0.25) {
                out.push(FILLERS.choose(rng).unwrap().to_string());
            }
            let pool = if rng.gen_bool(focus) {
                &self.topics[topic]
            } else {
                &self.background
            };
            let w = pool.choose(rng).unwrap();
            if rng.gen_bool(0.1) {
                let mut c = w.chars();
                let first = c.next().unwrap().to_ascii_uppercase();
                out.push(format!("{first}{}", c.as_str()));
            } else {
                out.push(w.clone());
            }
        }
        out.join(" ")
    }
}

pub fn generate_synthetic(config: &SynthConfig) -> Result<SynthOutput> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let k = config.topic_count;
    let vocab = Vocabulary::new(k);

    let width = config.participants.to_string().len().max(2);
    let participants: Vec<String> = (1..=config.participants).map(|i| format!("p{i:0width$}")).collect();
    let mut topic_of: Vec<usize> = (0..config.participants).map(|i| i % k).collect();
    topic_of.shuffle(&mut rng);
    let participant_topics: BTreeMap<String, usize> =
        participants.iter().cloned().zip(topic_of.iter().copied()).collect();

    let tracks: BTreeMap<String, u32> = (0..k)
        .map(|t| (format!("track{t}"), rng.gen_range(5..=20)))
        .collect();

    let mut slots = Vec::new();
    let mut sessions = Vec::new();
    let mut talks = Vec::new();
    let mut breaks = BTreeMap::new();
    let mut talk_topics = BTreeMap::new();
    let slot_len = config.talks_per_session as i64 * TALK_SECONDS;
    let topic_ids: Vec<usize> = (0..k).collect();

    for si in 0..config.slots {
        let slot_id = format!("slot{:02}", si + 1);
        let start = CONFERENCE_START + si as i64 * (BREAK_SECONDS + slot_len) + BREAK_SECONDS;
        breaks.insert(
            slot_id.clone(),
            Interval {
                start: start - BREAK_SECONDS,
                end: start,
            },
        );
        let session_topics: Vec<usize> = topic_ids
            .choose_multiple(&mut rng, config.rooms)
            .copied()
            .collect();
        let mut session_ids = Vec::new();
        for (room, &topic) in session_topics.iter().enumerate() {
            let session_id = format!("{slot_id}-r{}", room + 1);
            let talk_ids: Vec<String> = (1..=config.talks_per_session)
                .map(|t| format!("{session_id}-t{t}"))
                .collect();
            for id in &talk_ids {
                talk_topics.insert(id.clone(), topic);
                talks.push(Talk {
                    id: id.clone(),
                    title: vocab.text(&mut rng, topic, 6, 0.85),
                    abstract_text: vocab.text(&mut rng, topic, 40, 0.85),
                    fulltext: vocab.text(&mut rng, topic, 200, 0.85),
                    presenter: String::new(),
                    track: format!("track{topic}"),
                    session: session_id.clone(),
                });
            }
            sessions.push(Session {
                id: session_id.clone(),
                room: format!("room{}", room + 1),
                slot: slot_id.clone(),
                talks: talk_ids,
            });
            session_ids.push(session_id);
        }
        slots.push(TimeSlot {
            id: slot_id,
            start,
            end: start + slot_len,
            sessions: session_ids,
        });
    }

    // Presenters: distinct within a talk time, preferring a participant of the talk's topic.
    let by_id: BTreeMap<String, usize> = talks.iter().enumerate().map(|(i, t)| (t.id.clone(), i)).collect();
    for sess_group in sessions.chunks(config.rooms) {
        for pos in 0..config.talks_per_session {
            let mut used = BTreeSet::new();
            for sess in sess_group {
                let tid = &sess.talks[pos];
                let topic = talk_topics[tid];
                let free: Vec<usize> = (0..participants.len()).filter(|i| !used.contains(i)).collect();
                let matching: Vec<usize> =
                    free.iter().copied().filter(|&i| topic_of[i] == topic).collect();
                let pick = *matching.choose(&mut rng).or_else(|| free.choose(&mut rng)).unwrap();
                used.insert(pick);
                talks[by_id[tid]].presenter = participants[pick].clone();
            }
        }
    }

    let mut documents = BTreeMap::new();
    for (i, p) in participants.iter().enumerate() {
        let n_docs = if rng.gen_bool(NO_PUBLICATIONS) {
            0
        } else {
            rng.gen_range(1..=4)
        };
        let docs: Vec<Document> = (1..=n_docs)
            .map(|d| Document {
                id: format!("doc{d}"),
                text: vocab.text(&mut rng, topic_of[i], 120, 0.8),
            })
            .collect();
        documents.insert(p.clone(), docs);
    }

    let schedule = Schedule::new(slots, sessions, talks, tracks, breaks)?;

    let mut records = Vec::new();
    let s = config.interest_strength;
    for slot in schedule.slots() {
        let present: Vec<bool> = participants.iter().map(|_| rng.gen_bool(PRESENCE)).collect();
        for position in 0..schedule.position_count(&slot.id) {
            let time = TalkTime {
                slot: slot.id.clone(),
                position,
            };
            let candidates = schedule.candidates(&time);
            for (i, p) in participants.iter().enumerate() {
                let own = candidates.iter().find(|t| schedule.talks()[**t].presenter == *p);
                let talk = match own {
                    Some(t) => *t,
                    None if !present[i] => continue,
                    None => {
                        let weights: Vec<f64> = candidates
                            .iter()
                            .map(|t| {
                                let on_topic = if talk_topics[*t] == topic_of[i] { s } else { 0.0 };
                                on_topic + (1.0 - s) / k as f64
                            })
                            .collect();
                        let dist = WeightedIndex::new(&weights)
                            .map_err(|e| Error::config(format!("attendance weights: {e}")))?;
                        candidates[dist.sample(&mut rng)]
                    }
                };
                records.push(AttendanceRecord {
                    participant: p.clone(),
                    talk: talk.to_string(),
                });
            }
        }
    }
    let attendance = AttendanceTable::new(records, &schedule)?;

    let h = config.contact_homophily;
    let p_same = BASE_CONTACT_RATE + 0.36 * h;
    let p_diff = BASE_CONTACT_RATE * (1.0 - 0.5 * h);
    let mut raw = Vec::new();
    for b in schedule.breaks().values() {
        for i in 0..participants.len() {
            for j in (i + 1)..participants.len() {
                let rate = if topic_of[i] == topic_of[j] { p_same } else { p_diff };
                if !rng.gen_bool(rate) {
                    continue;
                }
                let duration = DEFAULT_RESOLUTION * rng.gen_range(1..=30);
                let latest = (b.end - duration).max(b.start);
                let start = rng.gen_range(b.start..=latest);
                raw.push(Contact {
                    u: participants[i].clone(),
                    v: participants[j].clone(),
                    start,
                    end: (start + duration).min(b.end),
                });
            }
        }
    }
    let contacts = ContactLog::new(raw, DEFAULT_RESOLUTION)?;

    let corpus = Corpus {
        documents,
        cutoff: schedule.start(),
    };
    Ok(SynthOutput {
        dataset: Dataset {
            schedule,
            attendance,
            contacts,
            corpus,
        },
        truth: PlantedTruth {
            config: config.clone(),
            participant_topics,
            talk_topics,
        },
    })
}
