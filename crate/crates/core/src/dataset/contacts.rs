use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Temporal resolution of the proximity sensors, in seconds. Contacts shorter
/// than this are discarded on load.
pub const DEFAULT_RESOLUTION: i64 = 20;

/// A face-to-face contact between two participants, `u < v` after canonicalization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Contact {
    pub u: String,
    pub v: String,
    pub start: i64,
    pub end: i64,
}

impl Contact {
    pub fn duration(&self) -> i64 {
        self.end - self.start
    }

    pub fn involves(&self, p: &str) -> bool {
        self.u == p || self.v == p
    }

    /// The endpoint that is not `p`, if `p` is an endpoint.
    pub fn other(&self, p: &str) -> Option<&str> {
        if self.u == p {
            Some(&self.v)
        } else if self.v == p {
            Some(&self.u)
        } else {
            None
        }
    }
}

/// Canonicalized contact intervals: one entry per maximal run of contact per pair.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ContactLog {
    intervals: Vec<Contact>,
}

impl ContactLog {
    /// Orders each pair, unions overlapping (or touching) intervals of the same
    /// pair and drops intervals shorter than `resolution`.
    pub fn new(raw: Vec<Contact>, resolution: i64) -> Result<Self> {
        let mut by_pair: BTreeMap<(String, String), Vec<(i64, i64)>> = BTreeMap::new();
        for c in raw {
            if c.u == c.v {
                return Err(Error::validation(format!(
                    "contact of '{}' with itself at [{}, {}]",
                    c.u, c.start, c.end
                )));
            }
            if c.end < c.start {
                return Err(Error::validation(format!(
                    "contact ({}, {}) ends at {} before it starts at {}",
                    c.u, c.v, c.end, c.start
                )));
            }
            let key = if c.u < c.v { (c.u, c.v) } else { (c.v, c.u) };
            by_pair.entry(key).or_default().push((c.start, c.end));
        }

        let mut intervals = Vec::new();
        for ((u, v), mut spans) in by_pair {
            spans.sort_unstable();
            let mut merged: Vec<(i64, i64)> = Vec::with_capacity(spans.len());
            for (s, e) in spans {
                match merged.last_mut() {
                    Some(last) if s <= last.1 => last.1 = last.1.max(e),
                    _ => merged.push((s, e)),
                }
            }
            intervals.extend(
                merged
                    .into_iter()
                    .filter(|(s, e)| e - s >= resolution)
                    .map(|(start, end)| Contact {
                        u: u.clone(),
                        v: v.clone(),
                        start,
                        end,
                    }),
            );
        }
        Ok(ContactLog { intervals })
    }

    pub fn intervals(&self) -> &[Contact] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Total contact seconds per unordered pair.
    pub fn aggregated(&self) -> BTreeMap<(&str, &str), i64> {
        let mut out = BTreeMap::new();
        for c in &self.intervals {
            *out.entry((c.u.as_str(), c.v.as_str())).or_insert(0) += c.duration();
        }
        out
    }

    /// Total contact seconds per pair over intervals that end strictly before `t`.
    pub fn aggregated_before(&self, t: i64) -> BTreeMap<(&str, &str), i64> {
        let mut out = BTreeMap::new();
        for c in self.intervals.iter().filter(|c| c.end < t) {
            *out.entry((c.u.as_str(), c.v.as_str())).or_insert(0) += c.duration();
        }
        out
    }

    pub fn participants(&self) -> BTreeSet<&str> {
        self.intervals
            .iter()
            .flat_map(|c| [c.u.as_str(), c.v.as_str()])
            .collect()
    }
}

/// Orders a pair of ids so it matches the keys of [`ContactLog::aggregated`].
pub(crate) fn pair_key<'a>(a: &'a str, b: &'a str) -> (&'a str, &'a str) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(u: &str, v: &str, start: i64, end: i64) -> Contact {
        Contact {
            u: u.into(),
            v: v.into(),
            start,
            end,
        }
    }

    #[test]
    fn overlapping_intervals_are_unioned() {
        let log = ContactLog::new(vec![c("u", "v", 0, 40), c("v", "u", 20, 60)], 20).unwrap();
        assert_eq!(log.intervals(), &[c("u", "v", 0, 60)]);
    }

    #[test]
    fn short_contacts_are_dropped() {
        let log = ContactLog::new(vec![c("a", "b", 0, 19), c("a", "c", 0, 20)], 20).unwrap();
        assert_eq!(log.intervals(), &[c("a", "c", 0, 20)]);
    }

    #[test]
    fn disjoint_intervals_stay_separate_and_aggregate() {
        let log = ContactLog::new(vec![c("a", "b", 0, 40), c("b", "a", 100, 180)], 20).unwrap();
        assert_eq!(log.intervals().len(), 2);
        assert_eq!(log.aggregated()[&("a", "b")], 120);
        assert_eq!(log.aggregated_before(180).get(&("a", "b")), Some(&40));
    }

    #[test]
    fn self_contact_is_rejected() {
        assert!(ContactLog::new(vec![c("a", "a", 0, 40)], 20).is_err());
        assert!(ContactLog::new(vec![c("a", "b", 40, 0)], 20).is_err());
    }

    #[test]
    fn empty_log() {
        let log = ContactLog::new(vec![], 20).unwrap();
        assert!(log.is_empty());
        assert!(log.aggregated().is_empty());
    }
}
