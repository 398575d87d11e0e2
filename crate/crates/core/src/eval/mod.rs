//! Accuracy, AUC and the influence-factor analyses.

mod auc;
mod influence;

use serde::Serialize;

pub use auc::{auc, auc_from_scores, expand, roc_curve, trapezoid_auc};
pub use influence::{
    influence_presenter, influence_same_talk, InfluenceCategory, InfluenceReport, DEFAULT_PRESENTER_THRESHOLDS,
};

use crate::error::{Error, Result};
use crate::predict::Decision;

/// A success proportion with a 95% normal-approximation interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Proportion {
    pub successes: usize,
    pub n: usize,
    /// `None` when `n` is 0.
    pub probability: Option<f64>,
    pub ci_low: Option<f64>,
    pub ci_high: Option<f64>,
}

impl Proportion {
    pub fn new(successes: usize, n: usize) -> Self {
        assert!(successes <= n, "more successes than trials");
        if n == 0 {
            return Proportion {
                successes,
                n,
                probability: None,
                ci_low: None,
                ci_high: None,
            };
        }
        let p = successes as f64 / n as f64;
        let half = 1.96 * (p * (1.0 - p) / n as f64).sqrt();
        Proportion {
            successes,
            n,
            probability: Some(p),
            ci_low: Some((p - half).max(0.0)),
            ci_high: Some((p + half).min(1.0)),
        }
    }
}

/// Fraction of correct decisions with its 95% interval `(lo, hi)`.
pub fn accuracy_ci(decisions: &[Decision]) -> Result<(f64, (f64, f64))> {
    if decisions.is_empty() {
        return Err(Error::validation("accuracy of an empty decision set"));
    }
    let correct = decisions.iter().filter(|d| d.correct()).count();
    let p = Proportion::new(correct, decisions.len());
    Ok((
        p.probability.expect("non-empty"),
        (p.ci_low.expect("non-empty"), p.ci_high.expect("non-empty")),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationReport {
    pub predictor: String,
    pub population: String,
    pub accuracy: f64,
    pub accuracy_ci: (f64, f64),
    pub auc: f64,
    pub decision_count: usize,
    pub tie_count: usize,
}

impl EvaluationReport {
    pub fn new(predictor: impl Into<String>, population: impl Into<String>, decisions: &[Decision]) -> Result<Self> {
        let (accuracy, ci) = accuracy_ci(decisions)?;
        Ok(EvaluationReport {
            predictor: predictor.into(),
            population: population.into(),
            accuracy,
            accuracy_ci: ci,
            auc: auc(decisions)?,
            decision_count: decisions.len(),
            tie_count: decisions.iter().filter(|d| d.tie).count(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::TalkTime;

    fn decision(correct: bool) -> Decision {
        let tt = TalkTime {
            slot: "s".into(),
            position: 0,
        };
        let attended = if correct { "a" } else { "b" };
        Decision::new("p", &tt, vec!["a".into(), "b".into()], vec![0.7, 0.3], attended).unwrap()
    }

    #[test]
    fn accuracy_counts() {
        let ds = [decision(true), decision(true), decision(true), decision(false)];
        assert_eq!(accuracy_ci(&ds).unwrap().0, 0.75);
        let all = [decision(true), decision(true)];
        let (a, (lo, hi)) = accuracy_ci(&all).unwrap();
        assert_eq!((a, lo, hi), (1.0, 1.0, 1.0));
        assert!(accuracy_ci(&[]).is_err());
    }

    #[test]
    fn half_width_at_one_hundred() {
        let p = Proportion::new(50, 100);
        let half = p.ci_high.unwrap() - 0.5;
        assert!((half - 0.098).abs() < 1e-12);
        assert!((0.5 - p.ci_low.unwrap() - 0.098).abs() < 1e-12);
        assert_eq!(Proportion::new(0, 0).probability, None);
    }

    #[test]
    fn report_fields() {
        let ds = [decision(true), decision(false), decision(true)];
        let r = EvaluationReport::new("x", "all", &ds).unwrap();
        assert_eq!(r.decision_count, 3);
        assert_eq!(r.tie_count, 0);
        assert!(r.accuracy_ci.0 <= r.accuracy && r.accuracy <= r.accuracy_ci.1);
        assert!((0.0..=1.0).contains(&r.auc));
    }
}
