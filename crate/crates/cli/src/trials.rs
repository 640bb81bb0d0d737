//! Randomized trial runner: many independent seeded configurations on one
//! graph, each taken through period detection.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use diffusion_core::{detect_period, Detection, Graph};

use crate::rng::{mix_seed, random_config};
use crate::HarnessError;

pub const TRIALS_SCHEMA: &str = "diffuse.trials/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub trial: u64,
    pub sub_seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pre_period: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
    pub class: String,
    pub steps_used: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialSummary {
    pub schema: String,
    pub graph: String,
    pub chips: [i64; 2],
    pub trials: u64,
    pub seed: u64,
    pub budget: u64,
    pub all_tight: bool,
    pub exhausted: u64,
    pub period_histogram: BTreeMap<u64, u64>,
    pub pre_period_histogram: BTreeMap<u64, u64>,
    pub per_trial: Vec<TrialOutcome>,
}

/// Runs `trials` independent detections. Trial `i` draws its configuration
/// from the sub-seed `mix_seed(seed, i)`, so results depend only on
/// `(seed, i)` and aggregation order is fixed by the trial index.
pub fn run_trials(
    g: &Graph,
    graph_spec: &str,
    lo: i64,
    hi: i64,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<TrialSummary, HarnessError> {
    if trials < 1 {
        return Err(HarnessError::BadSpec("need at least one trial".into()));
    }
    let per_trial: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<TrialOutcome, HarnessError> {
            let sub_seed = mix_seed(seed, i);
            let c0 = random_config(g, lo, hi, sub_seed)?;
            let outcome = match detect_period(g, &c0, budget)? {
                Detection::Periodic(report) => TrialOutcome {
                    trial: i,
                    sub_seed,
                    pre_period: Some(report.pre_period),
                    period: Some(report.period),
                    class: serde_plain_class(&report.classification),
                    steps_used: report.steps_used,
                },
                Detection::BudgetExhausted { steps_used, .. } => TrialOutcome {
                    trial: i,
                    sub_seed,
                    pre_period: None,
                    period: None,
                    class: "budget_exhausted".into(),
                    steps_used,
                },
            };
            Ok(outcome)
        })
        .collect::<Result<_, _>>()?;

    let mut period_histogram = BTreeMap::new();
    let mut pre_period_histogram = BTreeMap::new();
    let mut exhausted = 0;
    for outcome in &per_trial {
        match (outcome.period, outcome.pre_period) {
            (Some(p), Some(t)) => {
                *period_histogram.entry(p).or_insert(0u64) += 1;
                *pre_period_histogram.entry(t).or_insert(0u64) += 1;
            }
            _ => exhausted += 1,
        }
    }
    let all_tight = per_trial
        .iter()
        .all(|o| matches!(o.period, Some(1) | Some(2)));

    Ok(TrialSummary {
        schema: TRIALS_SCHEMA.into(),
        graph: graph_spec.into(),
        chips: [lo, hi],
        trials,
        seed,
        budget,
        all_tight,
        exhausted,
        period_histogram,
        pre_period_histogram,
        per_trial,
    })
}

fn serde_plain_class(c: &diffusion_core::Classification) -> String {
    serde_json::to_value(c)
        .expect("classification serializes")
        .as_str()
        .expect("classification is a string")
        .to_string()
}
