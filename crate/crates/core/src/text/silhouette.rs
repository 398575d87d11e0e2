use std::collections::BTreeMap;

use super::{cosine, DocVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SilhouetteResult {
    /// Silhouette value per talk, session A's talks first.
    pub values: Vec<(String, f64)>,
    pub average: f64,
}

/// Silhouette of the split of talks into two parallel sessions, using
/// single-link cosine distance (`1 - cos` to the closest other talk of a session).
///
/// A talk alone in its session has no within-session distance and scores 0,
/// as does a talk whose within and across distances are both 0.
pub fn silhouette_pair(
    session_a: &[&str],
    session_b: &[&str],
    vectors: &BTreeMap<String, DocVector>,
) -> Result<SilhouetteResult> {
    silhouette_sessions(&[session_a, session_b], vectors)
}

/// Silhouette over any number of parallel sessions. Under single-link
/// distance the nearest other session is the closest talk outside the own one.
pub fn silhouette_sessions(sessions: &[&[&str]], vectors: &BTreeMap<String, DocVector>) -> Result<SilhouetteResult> {
    if sessions.len() < 2 || sessions.iter().any(|s| s.is_empty()) {
        return Err(Error::validation("silhouette needs two or more non-empty sessions"));
    }
    let lookup = |t: &str| {
        vectors
            .get(t)
            .ok_or_else(|| Error::validation(format!("no vector for talk '{t}'")))
    };
    let single_link = |t: &str, v: &DocVector, talks: &mut dyn Iterator<Item = &str>| -> Result<Option<f64>> {
        let mut best: Option<f64> = None;
        for u in talks.filter(|&u| u != t) {
            let d = 1.0 - cosine(v, lookup(u)?);
            best = Some(best.map_or(d, |b: f64| b.min(d)));
        }
        Ok(best)
    };

    let mut values = Vec::new();
    for (k, own) in sessions.iter().enumerate() {
        for &t in own.iter() {
            let v = lookup(t)?;
            let within = single_link(t, v, &mut own.iter().copied())?;
            let mut others = sessions
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .flat_map(|(_, s)| s.iter().copied());
            let across = single_link(t, v, &mut others)?.expect("other sessions are non-empty");
            let silh = match within {
                None => 0.0,
                Some(w) => {
                    let denom = w.max(across);
                    if denom == 0.0 {
                        0.0
                    } else {
                        (across - w) / denom
                    }
                }
            };
            values.push((t.to_string(), silh));
        }
    }
    let average = values.iter().map(|(_, s)| s).sum::<f64>() / values.len() as f64;
    Ok(SilhouetteResult { values, average })
}
