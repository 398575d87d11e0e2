//! Bag-of-words interest and talk models.
//!
//! Text is lowercased, split on anything that is not an ASCII letter, stripped
//! of one-letter tokens and stopwords, then Porter-stemmed. Vectors carry raw
//! term frequency times `ln(N / df)`; cosine similarity does the normalisation.

mod porter;
mod silhouette;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::Path;

use serde::Serialize;

pub use porter::porter_stem;
pub use silhouette::{silhouette_pair, silhouette_sessions, SilhouetteResult};

use crate::dataset::{Corpus, Schedule};
use crate::error::{Error, Result};

const DEFAULT_STOPWORDS: &str = include_str!("../../data/stopwords.txt");

/// Lowercase words removed before stemming.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stopwords(HashSet<String>);

impl Stopwords {
    pub fn english() -> Self {
        Self::parse(DEFAULT_STOPWORDS)
    }

    /// One word per line; blank lines and surrounding whitespace are ignored.
    pub fn parse(list: &str) -> Self {
        Stopwords(
            list.lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .collect(),
        )
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse(&raw))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(word)
    }
}

impl<S: Into<String>> FromIterator<S> for Stopwords {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Stopwords(iter.into_iter().map(Into::into).collect())
    }
}

pub fn preprocess(text: &str, stopwords: &Stopwords) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_ascii_alphabetic())
        .filter(|t| t.len() > 1 && !stopwords.contains(t))
        .map(porter_stem)
        .filter(|t| !t.is_empty())
        .collect()
}

/// Which text of a talk represents it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TalkRepresentation {
    #[serde(rename = "paper")]
    FullPaper,
    Abstract,
    Title,
}

impl TalkRepresentation {
    pub const ALL: [TalkRepresentation; 3] = [
        TalkRepresentation::FullPaper,
        TalkRepresentation::Abstract,
        TalkRepresentation::Title,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TalkRepresentation::FullPaper => "paper",
            TalkRepresentation::Abstract => "abstract",
            TalkRepresentation::Title => "title",
        }
    }
}

impl std::str::FromStr for TalkRepresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(TalkRepresentation::FullPaper),
            "abstract" => Ok(TalkRepresentation::Abstract),
            "title" => Ok(TalkRepresentation::Title),
            other => Err(Error::config(format!("unknown talk representation '{other}'"))),
        }
    }
}

/// Sparse non-negative term weights with a cached Euclidean norm.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DocVector {
    weights: BTreeMap<String, f64>,
    norm: f64,
    /// Sum of squared weights, summed in the same order as [`DocVector::dot`].
    norm_sq: f64,
}

impl DocVector {
    /// Zero weights are dropped; negative or non-finite weights are rejected.
    pub fn new<K: Into<String>>(weights: impl IntoIterator<Item = (K, f64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (term, w) in weights {
            let term = term.into();
            if !w.is_finite() || w < 0.0 {
                return Err(Error::validation(format!("term '{term}' has weight {w}")));
            }
            if w > 0.0 {
                map.insert(term, w);
            }
        }
        let norm_sq = map.values().fold(0.0, |acc, w| acc + w * w);
        Ok(DocVector {
            weights: map,
            norm: norm_sq.sqrt(),
            norm_sq,
        })
    }

    pub fn weights(&self) -> &BTreeMap<String, f64> {
        &self.weights
    }

    pub fn get(&self, term: &str) -> f64 {
        self.weights.get(term).copied().unwrap_or(0.0)
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn dot(&self, other: &DocVector) -> f64 {
        let mut a = self.weights.iter().peekable();
        let mut b = other.weights.iter().peekable();
        let mut sum = 0.0;
        while let (Some((ka, wa)), Some((kb, wb))) = (a.peek(), b.peek()) {
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    sum += *wa * *wb;
                    a.next();
                    b.next();
                }
            }
        }
        sum
    }
}

/// Cosine similarity in [0, 1]; zero when either vector is empty.
pub fn cosine(a: &DocVector, b: &DocVector) -> f64 {
    if a.norm == 0.0 || b.norm == 0.0 {
        return 0.0;
    }
    // sqrt(x * x) == x exactly, so a vector's similarity with itself is exactly 1
    (a.dot(b) / (a.norm_sq * b.norm_sq).sqrt()).clamp(0.0, 1.0)
}

/// Participant interest profiles and talk vectors sharing one idf.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorSpace {
    pub representation: TalkRepresentation,
    pub profiles: BTreeMap<String, DocVector>,
    pub talks: BTreeMap<String, DocVector>,
}

impl VectorSpace {
    pub fn has_profile(&self, participant: &str) -> bool {
        self.profiles.contains_key(participant)
    }
}

fn term_counts(texts: impl IntoIterator<Item = impl AsRef<str>>, stopwords: &Stopwords) -> BTreeMap<String, f64> {
    let mut counts = BTreeMap::new();
    for text in texts {
        for token in preprocess(text.as_ref(), stopwords) {
            *counts.entry(token).or_insert(0.0) += 1.0;
        }
    }
    counts
}

/// Builds tf-idf vectors. The idf universe is every participant profile (one
/// document per participant, counts summed over their publications) plus
/// every talk document in the chosen representation. Participants without
/// publications get no profile.
pub fn build_vectors(
    corpus: &Corpus,
    schedule: &Schedule,
    representation: TalkRepresentation,
    stopwords: &Stopwords,
) -> Result<VectorSpace> {
    let profile_counts: BTreeMap<&str, BTreeMap<String, f64>> = corpus
        .documents
        .iter()
        .filter(|(_, docs)| !docs.is_empty())
        .map(|(p, docs)| (p.as_str(), term_counts(docs.iter().map(|d| d.text.as_str()), stopwords)))
        .collect();
    if profile_counts.is_empty() {
        return Err(Error::validation("no participant has any publication"));
    }
    let talk_counts: BTreeMap<&str, BTreeMap<String, f64>> = schedule
        .talks()
        .values()
        .map(|t| {
            let text = match representation {
                TalkRepresentation::FullPaper => &t.fulltext,
                TalkRepresentation::Abstract => &t.abstract_text,
                TalkRepresentation::Title => &t.title,
            };
            (t.id.as_str(), term_counts([text], stopwords))
        })
        .collect();

    let n = (profile_counts.len() + talk_counts.len()) as f64;
    let mut df: BTreeMap<&str, f64> = BTreeMap::new();
    for counts in profile_counts.values().chain(talk_counts.values()) {
        for term in counts.keys() {
            *df.entry(term.as_str()).or_insert(0.0) += 1.0;
        }
    }
    let weigh = |counts: &BTreeMap<String, f64>| {
        DocVector::new(
            counts
                .iter()
                .map(|(term, tf)| (term.clone(), tf * (n / df[term.as_str()]).ln())),
        )
    };
    let profiles = profile_counts
        .iter()
        .map(|(p, c)| Ok((p.to_string(), weigh(c)?)))
        .collect::<Result<_>>()?;
    let talks = talk_counts
        .iter()
        .map(|(t, c)| Ok((t.to_string(), weigh(c)?)))
        .collect::<Result<_>>()?;
    Ok(VectorSpace {
        representation,
        profiles,
        talks,
    })
}

/// Terms appearing in any vector of the space.
pub fn vocabulary(space: &VectorSpace) -> BTreeSet<&str> {
    space
        .profiles
        .values()
        .chain(space.talks.values())
        .flat_map(|v| v.weights.keys().map(String::as_str))
        .collect()
}
