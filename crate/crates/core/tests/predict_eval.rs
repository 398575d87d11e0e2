use std::collections::BTreeSet;

use proptest::prelude::*;
use talkwalk::dataset::{generate_synthetic, Dataset, SynthConfig, TalkTime};
use talkwalk::eval::{auc_from_scores, influence_same_talk, trapezoid_auc, InfluenceCategory};
use talkwalk::graphs::WeightMode;
use talkwalk::predict::{
    baseline_majority, cosine_predict, decision_units, hrpr_predict, sweep, CosineMode, Decision, HrprContext,
    Population,
};
use talkwalk::text::{build_vectors, Stopwords, TalkRepresentation};
use talkwalk::walk::WalkConfig;

fn synth(interest: f64, homophily: f64, seed: u64) -> Dataset {
    generate_synthetic(&SynthConfig {
        participants: 30,
        slots: 4,
        interest_strength: interest,
        contact_homophily: homophily,
        seed,
        ..SynthConfig::default()
    })
    .unwrap()
    .dataset
}

proptest! {
    #[test]
    fn rescaling_keeps_prediction_and_normalisation(
        scores in prop::collection::vec(0.0f64..10.0, 2..5),
        lambda in 0.001f64..1000.0,
    ) {
        let time = TalkTime { slot: "s".into(), position: 0 };
        let candidates: Vec<String> = (0..scores.len()).map(|i| format!("t{i}")).collect();
        let a = Decision::new("p", &time, candidates.clone(), scores.clone(), "t0").unwrap();
        let scaled: Vec<f64> = scores.iter().map(|s| s * lambda).collect();
        let b = Decision::new("p", &time, candidates, scaled, "t0").unwrap();
        prop_assert_eq!(&a.predicted, &b.predicted);
        for (x, y) in a.normalized.iter().zip(&b.normalized) {
            prop_assert!((x - y).abs() < 1e-12);
        }
        let sum: f64 = a.normalized.iter().sum();
        prop_assert!(sum == 0.0 || (sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn auc_is_antisymmetric_and_matches_roc_area(
        pos in prop::collection::vec(0u8..20, 1..30),
        neg in prop::collection::vec(0u8..20, 1..30),
    ) {
        let pos: Vec<f64> = pos.into_iter().map(f64::from).collect();
        let neg: Vec<f64> = neg.into_iter().map(f64::from).collect();
        let a = auc_from_scores(&pos, &neg).unwrap();
        let flipped = auc_from_scores(
            &pos.iter().map(|x| -x).collect::<Vec<_>>(),
            &neg.iter().map(|x| -x).collect::<Vec<_>>(),
        ).unwrap();
        prop_assert!((a + flipped - 1.0).abs() < 1e-12);
        prop_assert!((a - trapezoid_auc(&pos, &neg).unwrap()).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&a));
    }
}

#[test]
fn decisions_cover_exactly_the_attendance_records() {
    let d = synth(0.9, 0.8, 5);
    let expected: BTreeSet<(String, String, usize)> = d
        .attendance
        .entries()
        .map(|(p, t, _)| (p.to_string(), t.slot.clone(), t.position))
        .collect();
    let key = |x: &Decision| (x.participant.clone(), x.slot.clone(), x.position);
    let majority: BTreeSet<_> = baseline_majority(&d).unwrap().iter().map(key).collect();
    assert_eq!(majority, expected);
    let cfg = WalkConfig::new(0.15, vec![0.0, 0.5, 0.5]).unwrap();
    let hrpr = hrpr_predict(&d, None, &cfg, false, WeightMode::Duration, Population::All).unwrap();
    assert_eq!(hrpr.iter().map(key).collect::<BTreeSet<_>>(), expected);
    assert_eq!(decision_units(&d).len(), expected.len());
    for x in &hrpr {
        assert!(x.candidates.contains(&x.predicted));
    }
}

#[test]
fn session_modes_agree_with_talk_wise_when_sessions_are_one_sided() {
    // with planted interest, whole sessions sit on one side of the profile
    let d = synth(1.0, 0.8, 2);
    let space = build_vectors(&d.corpus, &d.schedule, TalkRepresentation::Abstract, &Stopwords::english()).unwrap();
    let talk = cosine_predict(&d, &space, CosineMode::TalkWise).unwrap();
    let avg = cosine_predict(&d, &space, CosineMode::SessionAvg).unwrap();
    let max = cosine_predict(&d, &space, CosineMode::SessionMax).unwrap();
    let mut checked = 0;
    for ((t, a), m) in talk.iter().zip(&avg).zip(&max) {
        let one_sided = d.schedule.slot(&t.slot).unwrap().sessions.len() == 2 && {
            let sessions = &d.schedule.slot(&t.slot).unwrap().sessions;
            let sims = |s: &String| -> Vec<f64> {
                d.schedule
                    .session(s)
                    .unwrap()
                    .talks
                    .iter()
                    .map(|x| talkwalk::text::cosine(&space.profiles[&t.participant], &space.talks[x]))
                    .collect()
            };
            let (a0, b0) = (sims(&sessions[0]), sims(&sessions[1]));
            let amin = a0.iter().copied().fold(f64::INFINITY, f64::min);
            let amax = a0.iter().copied().fold(0.0, f64::max);
            let bmin = b0.iter().copied().fold(f64::INFINITY, f64::min);
            let bmax = b0.iter().copied().fold(0.0, f64::max);
            amin > bmax || bmin > amax
        };
        if one_sided {
            assert_eq!(t.predicted, a.predicted);
            assert_eq!(t.predicted, m.predicted);
            checked += 1;
        }
    }
    assert!(checked > 50, "only {checked} one-sided decisions");
}

#[test]
fn sweep_is_deterministic() {
    let d = synth(0.9, 0.8, 3);
    let space = build_vectors(&d.corpus, &d.schedule, TalkRepresentation::Abstract, &Stopwords::english()).unwrap();
    let ctx = HrprContext::new(&d, Some(&space), WeightMode::Binary).unwrap();
    let base = WalkConfig::new(0.15, vec![1.0, 0.0, 0.0]).unwrap();
    let a = sweep(&ctx, &base, true, 0.25, Population::Core).unwrap();
    let b = sweep(&ctx, &base, true, 0.25, Population::Core).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 15);
}

#[test]
fn homophily_raises_coffee_break_agreement() {
    let d = synth(0.9, 1.0, 8);
    let r = influence_same_talk(&d);
    let get = |c| r.iter().find(|(k, _)| *k == c).unwrap().1;
    let coffee = get(InfluenceCategory::CoffeeBreak);
    let none = get(InfluenceCategory::NoContact);
    assert!(coffee.n > 30 && none.n > 30);
    // the intervals do not overlap
    assert!(coffee.ci_low.unwrap() > none.ci_high.unwrap(), "{coffee:?} vs {none:?}");
}
