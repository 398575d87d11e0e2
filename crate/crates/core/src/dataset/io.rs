//! File formats: `schedule.json`, `attendance.csv`, `contacts.csv` and the
//! `corpus/<participant>/<doc>.txt` tree.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{
    AttendanceRecord, AttendanceTable, Contact, ContactLog, Corpus, Dataset, Document, Interval,
    Schedule, Session, Talk, TimeSlot, DEFAULT_RESOLUTION,
};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct ScheduleFile {
    slots: Vec<SlotRecord>,
    sessions: Vec<SessionRecord>,
    talks: Vec<TalkRecord>,
    #[serde(default)]
    tracks: Vec<TrackRecord>,
    #[serde(default)]
    breaks: Vec<BreakRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SlotRecord {
    id: String,
    start: i64,
    end: i64,
    sessions: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SessionRecord {
    id: String,
    room: String,
    slot: String,
    talks: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TalkRecord {
    id: String,
    #[serde(default)]
    title: String,
    #[serde(default, rename = "abstract")]
    abstract_text: String,
    #[serde(default)]
    fulltext_path: Option<String>,
    presenter: String,
    track: String,
    session: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct TrackRecord {
    id: String,
    accepted_papers: u32,
}

#[derive(Debug, Serialize, Deserialize)]
struct BreakRecord {
    slot: String,
    start: i64,
    end: i64,
}

#[derive(Debug, Serialize, Deserialize)]
struct AttendanceRow {
    participant_id: String,
    talk_id: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct ContactRow {
    u: String,
    v: String,
    start: i64,
    end: i64,
}

/// Locations of the input files.
#[derive(Debug, Clone)]
pub struct DatasetPaths {
    pub schedule: PathBuf,
    pub attendance: PathBuf,
    pub contacts: PathBuf,
    pub corpus: Option<PathBuf>,
    /// Minimum contact duration kept on load, seconds.
    pub resolution: i64,
}

impl DatasetPaths {
    /// The conventional layout produced by [`save_dataset`].
    pub fn in_dir(dir: impl AsRef<Path>) -> Self {
        let dir = dir.as_ref();
        DatasetPaths {
            schedule: dir.join("schedule.json"),
            attendance: dir.join("attendance.csv"),
            contacts: dir.join("contacts.csv"),
            corpus: Some(dir.join("corpus")),
            resolution: DEFAULT_RESOLUTION,
        }
    }
}

pub fn load_dataset(paths: &DatasetPaths) -> Result<Dataset> {
    let schedule = load_schedule(&paths.schedule)?;
    let attendance = load_attendance(&paths.attendance, &schedule)?;
    let contacts = load_contacts(&paths.contacts, paths.resolution)?;
    let mut corpus = match &paths.corpus {
        Some(dir) => load_corpus(dir)?,
        None => Corpus::default(),
    };
    corpus.cutoff = schedule.start();
    Ok(Dataset {
        schedule,
        attendance,
        contacts,
        corpus,
    })
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn load_schedule(path: &Path) -> Result<Schedule> {
    let raw = read_text(path)?;
    let file: ScheduleFile = serde_json::from_str(&raw).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        line: e.line() as u64,
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));

    let slots = file
        .slots
        .into_iter()
        .map(|s| TimeSlot {
            id: s.id,
            start: s.start,
            end: s.end,
            sessions: s.sessions,
        })
        .collect();
    let sessions = file
        .sessions
        .into_iter()
        .map(|s| Session {
            id: s.id,
            room: s.room,
            slot: s.slot,
            talks: s.talks,
        })
        .collect();
    let mut talks = Vec::with_capacity(file.talks.len());
    for t in file.talks {
        let fulltext = match t.fulltext_path.as_deref() {
            Some(p) if !p.is_empty() => read_text(&base.join(p))?,
            _ => String::new(),
        };
        talks.push(Talk {
            id: t.id,
            title: t.title,
            abstract_text: t.abstract_text,
            fulltext,
            presenter: t.presenter,
            track: t.track,
            session: t.session,
        });
    }
    let mut tracks = BTreeMap::new();
    for t in file.tracks {
        if tracks.insert(t.id.clone(), t.accepted_papers).is_some() {
            return Err(Error::validation(format!("duplicate track '{}'", t.id)));
        }
    }
    let mut breaks = BTreeMap::new();
    for b in file.breaks {
        let iv = Interval {
            start: b.start,
            end: b.end,
        };
        if breaks.insert(b.slot.clone(), iv).is_some() {
            return Err(Error::validation(format!("two breaks for slot '{}'", b.slot)));
        }
    }
    Schedule::new(slots, sessions, talks, tracks, breaks)
}

fn csv_reader(path: &Path, expected: &[&str]) -> Result<csv::Reader<fs::File>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
    let headers = rdr.headers().map_err(|e| csv_error(path, e))?;
    let found: Vec<&str> = headers.iter().collect();
    if found != expected {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: format!("expected header '{}', found '{}'", expected.join(","), found.join(",")),
        });
    }
    Ok(rdr)
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: e.to_string(),
    }
}

pub fn load_attendance(path: &Path, schedule: &Schedule) -> Result<AttendanceTable> {
    let mut rdr = csv_reader(path, &["participant_id", "talk_id"])?;
    let mut records = Vec::new();
    for row in rdr.deserialize::<AttendanceRow>() {
        let row = row.map_err(|e| csv_error(path, e))?;
        records.push(AttendanceRecord {
            participant: row.participant_id,
            talk: row.talk_id,
        });
    }
    AttendanceTable::new(records, schedule)
}

pub fn load_contacts(path: &Path, resolution: i64) -> Result<ContactLog> {
    let mut rdr = csv_reader(path, &["u", "v", "start", "end"])?;
    let mut raw = Vec::new();
    for row in rdr.deserialize::<ContactRow>() {
        let row = row.map_err(|e| csv_error(path, e))?;
        raw.push(Contact {
            u: row.u,
            v: row.v,
            start: row.start,
            end: row.end,
        });
    }
    ContactLog::new(raw, resolution)
}

/// Reads `dir/<participant>/<doc>.txt`. Non-`.txt` files are ignored.
pub fn load_corpus(dir: &Path) -> Result<Corpus> {
    let mut documents = BTreeMap::new();
    if !dir.exists() {
        return Ok(Corpus::default());
    }
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let pdir = entry.path();
        if !pdir.is_dir() {
            continue;
        }
        let participant = entry.file_name().to_string_lossy().into_owned();
        let mut docs = Vec::new();
        for doc in fs::read_dir(&pdir).map_err(|e| Error::io(&pdir, e))? {
            let doc = doc.map_err(|e| Error::io(&pdir, e))?.path();
            if doc.extension().and_then(|e| e.to_str()) != Some("txt") {
                continue;
            }
            let id = doc
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            docs.push(Document {
                id,
                text: read_text(&doc)?,
            });
        }
        docs.sort_by(|a, b| a.id.cmp(&b.id));
        documents.insert(participant, docs);
    }
    Ok(Corpus {
        documents,
        cutoff: None,
    })
}

fn write(path: &Path, contents: impl AsRef<[u8]>) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn finish(w: csv::Writer<Vec<u8>>) -> Vec<u8> {
    w.into_inner().expect("flushing an in-memory csv writer")
}

/// Writes the dataset in the layout read by [`DatasetPaths::in_dir`]. Talk
/// full texts go to `talks/<talk>.txt`.
pub fn save_dataset(dataset: &Dataset, dir: &Path) -> Result<()> {
    let s = &dataset.schedule;
    let mut talks = Vec::new();
    for t in s.talks().values() {
        let fulltext_path = if t.fulltext.is_empty() {
            None
        } else {
            let rel = format!("talks/{}.txt", t.id);
            write(&dir.join(&rel), &t.fulltext)?;
            Some(rel)
        };
        talks.push(TalkRecord {
            id: t.id.clone(),
            title: t.title.clone(),
            abstract_text: t.abstract_text.clone(),
            fulltext_path,
            presenter: t.presenter.clone(),
            track: t.track.clone(),
            session: t.session.clone(),
        });
    }
    let file = ScheduleFile {
        slots: s
            .slots()
            .iter()
            .map(|x| SlotRecord {
                id: x.id.clone(),
                start: x.start,
                end: x.end,
                sessions: x.sessions.clone(),
            })
            .collect(),
        sessions: s
            .sessions()
            .values()
            .map(|x| SessionRecord {
                id: x.id.clone(),
                room: x.room.clone(),
                slot: x.slot.clone(),
                talks: x.talks.clone(),
            })
            .collect(),
        talks,
        tracks: s
            .tracks()
            .iter()
            .map(|(id, n)| TrackRecord {
                id: id.clone(),
                accepted_papers: *n,
            })
            .collect(),
        breaks: s
            .breaks()
            .iter()
            .map(|(slot, b)| BreakRecord {
                slot: slot.clone(),
                start: b.start,
                end: b.end,
            })
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&file)?;
    json.push('\n');
    write(&dir.join("schedule.json"), json)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["participant_id", "talk_id"])?;
    for r in dataset.attendance.records() {
        w.write_record([&r.participant, &r.talk])?;
    }
    write(&dir.join("attendance.csv"), finish(w))?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["u", "v", "start", "end"])?;
    for c in dataset.contacts.intervals() {
        w.write_record([c.u.clone(), c.v.clone(), c.start.to_string(), c.end.to_string()])?;
    }
    write(&dir.join("contacts.csv"), finish(w))?;

    for (participant, docs) in &dataset.corpus.documents {
        let pdir = dir.join("corpus").join(participant);
        fs::create_dir_all(&pdir).map_err(|e| Error::io(&pdir, e))?;
        for d in docs {
            write(&pdir.join(format!("{}.txt", d.id)), &d.text)?;
        }
    }
    Ok(())
}
