//! Summary statistics of the contact network and attendance behaviour.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::Dataset;

/// How participants used the sessions of a slot. Each (participant, slot)
/// pair with at least one attended talk falls in exactly one category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SessionBehavior {
    /// (participant, slot) pairs with at least one attended talk.
    pub sessions: usize,
    /// Stayed in one session and attended every talk of it.
    pub all_talks: usize,
    /// Attended talks from more than one parallel session.
    pub changed: usize,
    pub exactly_two: usize,
    pub exactly_one: usize,
    /// Remaining partial visits (only possible for sessions longer than three talks).
    pub other: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub node_count: usize,
    pub edge_count: usize,
    pub average_degree: f64,
    pub average_path_length: f64,
    pub diameter: usize,
    /// Mean total contact seconds per connected pair.
    pub average_aggregated_contact_duration: f64,
    /// (x, number of contacts lasting at least x seconds).
    pub contact_length_histogram: Vec<(i64, usize)>,
    /// (x, number of pairs with at least x aggregated contact seconds).
    pub aggregated_contact_length_histogram: Vec<(i64, usize)>,
    /// (x, number of participants with at least x documents).
    pub papers_per_participant_histogram: Vec<(i64, usize)>,
    pub session_behavior: SessionBehavior,
}

pub fn dataset_stats(dataset: &Dataset) -> StatsReport {
    let aggregated = dataset.contacts.aggregated();
    let nodes: Vec<&str> = dataset.contacts.participants().into_iter().collect();
    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for (u, v) in aggregated.keys() {
        adj[index[u]].push(index[v]);
        adj[index[v]].push(index[u]);
    }
    let (apl, diameter) = path_metrics(&adj);

    let n = nodes.len();
    let m = aggregated.len();
    let aacd = if m == 0 {
        0.0
    } else {
        aggregated.values().sum::<i64>() as f64 / m as f64
    };

    let lengths: Vec<i64> = dataset.contacts.intervals().iter().map(|c| c.duration()).collect();
    let agg_lengths: Vec<i64> = aggregated.values().copied().collect();
    let papers: Vec<i64> = dataset
        .corpus
        .documents
        .values()
        .map(|d| d.len() as i64)
        .collect();
    let papers_hist = match papers.iter().copied().max() {
        Some(max) => (0..=max)
            .map(|x| (x, papers.iter().filter(|&&p| p >= x).count()))
            .collect(),
        None => Vec::new(),
    };

    StatsReport {
        node_count: n,
        edge_count: m,
        average_degree: if n == 0 { 0.0 } else { 2.0 * m as f64 / n as f64 },
        average_path_length: apl,
        diameter,
        average_aggregated_contact_duration: aacd,
        contact_length_histogram: cumulative_histogram(&lengths),
        aggregated_contact_length_histogram: cumulative_histogram(&agg_lengths),
        papers_per_participant_histogram: papers_hist,
        session_behavior: session_behavior(dataset),
    }
}

/// For every distinct value x, the number of values ≥ x.
pub fn cumulative_histogram(values: &[i64]) -> Vec<(i64, usize)> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let total = sorted.len();
    let mut i = 0;
    while i < total {
        let x = sorted[i];
        out.push((x, total - i));
        while i < total && sorted[i] == x {
            i += 1;
        }
    }
    out
}

/// Average hop distance over ordered reachable pairs, and the diameter of
/// the largest connected component.
fn path_metrics(adj: &[Vec<usize>]) -> (f64, usize) {
    let n = adj.len();
    let mut total = 0u64;
    let mut pairs = 0u64;
    let mut component = vec![usize::MAX; n];
    let mut ecc = vec![0usize; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for src in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if component[src] == usize::MAX {
            for (v, d) in dist.iter().enumerate() {
                if *d != usize::MAX {
                    component[v] = src;
                }
            }
        }
        for (v, &d) in dist.iter().enumerate() {
            if v != src && d != usize::MAX {
                total += d as u64;
                pairs += 1;
                ecc[src] = ecc[src].max(d);
            }
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &component {
        *sizes.entry(c).or_default() += 1;
    }
    let largest = sizes
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(c, _)| *c);
    let diameter = largest
        .map(|c| (0..n).filter(|&v| component[v] == c).map(|v| ecc[v]).max().unwrap_or(0))
        .unwrap_or(0);
    let apl = if pairs == 0 {
        0.0
    } else {
        total as f64 / pairs as f64
    };
    (apl, diameter)
}

fn session_behavior(dataset: &Dataset) -> SessionBehavior {
    let schedule = &dataset.schedule;
    let mut visits: BTreeMap<(&str, &str), Vec<&str>> = BTreeMap::new();
    for (p, time, talk) in dataset.attendance.entries() {
        visits.entry((p, time.slot.as_str())).or_default().push(talk);
    }
    let mut out = SessionBehavior::default();
    for talks in visits.values() {
        out.sessions += 1;
        let sessions: BTreeSet<&str> = talks
            .iter()
            .filter_map(|t| schedule.talk(t).map(|t| t.session.as_str()))
            .collect();
        if sessions.len() > 1 {
            out.changed += 1;
            continue;
        }
        let session_len = sessions
            .iter()
            .next()
            .and_then(|s| schedule.session(s))
            .map_or(0, |s| s.talks.len());
        match talks.len() {
            k if k == session_len => out.all_talks += 1,
            2 => out.exactly_two += 1,
            1 => out.exactly_one += 1,
            _ => out.other += 1,
        }
    }
    out
}
