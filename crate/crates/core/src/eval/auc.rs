use crate::error::{Error, Result};
use crate::predict::Decision;

/// Splits decisions into positive scores (attended talk) and negative
/// scores (the other candidates), using normalised scores.
pub fn expand(decisions: &[Decision]) -> (Vec<f64>, Vec<f64>) {
    let mut pos = Vec::with_capacity(decisions.len());
    let mut neg = Vec::with_capacity(decisions.len());
    for d in decisions {
        for (c, &s) in d.candidates.iter().zip(&d.normalized) {
            if *c == d.attended {
                pos.push(s);
            } else {
                neg.push(s);
            }
        }
    }
    (pos, neg)
}

/// Global AUC over all decisions.
pub fn auc(decisions: &[Decision]) -> Result<f64> {
    let (pos, neg) = expand(decisions);
    auc_from_scores(&pos, &neg)
}

fn check(pos: &[f64], neg: &[f64]) -> Result<()> {
    if pos.is_empty() || neg.is_empty() {
        return Err(Error::validation(format!(
            "AUC needs positives and negatives, got {} and {}",
            pos.len(),
            neg.len()
        )));
    }
    if pos.iter().chain(neg).any(|s| s.is_nan()) {
        return Err(Error::validation("AUC scores contain NaN"));
    }
    Ok(())
}

/// Scores grouped into runs of equal value, ascending, as (score, positives, negatives).
fn tie_groups(pos: &[f64], neg: &[f64]) -> Vec<(f64, u64, u64)> {
    let mut all: Vec<(f64, bool)> = pos.iter().map(|&s| (s, true)).chain(neg.iter().map(|&s| (s, false))).collect();
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut groups: Vec<(f64, u64, u64)> = Vec::new();
    for (s, is_pos) in all {
        match groups.last_mut() {
            Some(g) if g.0 == s => {
                if is_pos {
                    g.1 += 1
                } else {
                    g.2 += 1
                }
            }
            _ => groups.push((s, is_pos as u64, (!is_pos) as u64)),
        }
    }
    groups
}

/// Mann-Whitney form: share of (positive, negative) pairs with the positive
/// ranked higher, ties counting one half.
pub fn auc_from_scores(pos: &[f64], neg: &[f64]) -> Result<f64> {
    check(pos, neg)?;
    // twice the U statistic, kept integral
    let mut twice_u: u128 = 0;
    let mut neg_below: u128 = 0;
    for (_, p, n) in tie_groups(pos, neg) {
        twice_u += 2 * p as u128 * neg_below + p as u128 * n as u128;
        neg_below += n as u128;
    }
    Ok(twice_u as f64 / (2.0 * pos.len() as f64 * neg.len() as f64))
}

/// ROC points `(fpr, tpr)` from the strictest threshold down, starting at (0, 0).
pub fn roc_curve(pos: &[f64], neg: &[f64]) -> Result<Vec<(f64, f64)>> {
    check(pos, neg)?;
    let (np, nn) = (pos.len() as f64, neg.len() as f64);
    let mut points = vec![(0.0, 0.0)];
    let (mut tp, mut fp) = (0u64, 0u64);
    for (_, p, n) in tie_groups(pos, neg).into_iter().rev() {
        tp += p;
        fp += n;
        points.push((fp as f64 / nn, tp as f64 / np));
    }
    Ok(points)
}

/// Area under [`roc_curve`] by the trapezoidal rule.
pub fn trapezoid_auc(pos: &[f64], neg: &[f64]) -> Result<f64> {
    let pts = roc_curve(pos, neg)?;
    Ok(pts
        .windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
        .sum())
}
