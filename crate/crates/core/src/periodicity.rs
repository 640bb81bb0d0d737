//! Exact minimal pre-period/period detection and the property-plus
//! tightness certificate.
//!
//! Detection stores every visited configuration with its first-visit time.
//! Because firing is deterministic and single-valued, the first revisit of a
//! stored configuration lands exactly on the cycle entry, which yields the
//! minimal pre-period and the minimal period simultaneously.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::dynamics::{fire, ChipConfiguration};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default step budget for period detection.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Fixed,
    TightPeriod2,
    OtherPeriodic,
}

/// Minimal pre-period and period of an eventually periodic trajectory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub pre_period: u64,
    pub period: u64,
    #[serde(rename = "class")]
    pub classification: Classification,
    pub steps_used: u64,
}

/// Outcome of [`detect_period`]: either an exact report, or the budget ran
/// out and the last configuration is returned for resumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection {
    Periodic(PeriodReport),
    BudgetExhausted {
        last: ChipConfiguration,
        steps_used: u64,
    },
}

impl Detection {
    pub fn report(&self) -> Option<&PeriodReport> {
        match self {
            Detection::Periodic(r) => Some(r),
            Detection::BudgetExhausted { .. } => None,
        }
    }

    /// Panics if the budget was exhausted; convenient in tests and suites
    /// where termination is expected.
    pub fn expect_periodic(self) -> PeriodReport {
        match self {
            Detection::Periodic(r) => r,
            Detection::BudgetExhausted { steps_used, .. } => {
                panic!("period not found within {steps_used} steps")
            }
        }
    }
}

fn classify(period: u64) -> Classification {
    match period {
        1 => Classification::Fixed,
        2 => Classification::TightPeriod2,
        _ => Classification::OtherPeriodic,
    }
}

/// Iterates the firing map from `c0`, hash-indexing every configuration by
/// its first-visit time, until a configuration repeats or `budget` steps
/// have been taken.
pub fn detect_period(g: &Graph, c0: &ChipConfiguration, budget: u64) -> Result<Detection> {
    if budget < 1 {
        return Err(Error::InvalidParams("budget must be at least 1".into()));
    }
    let mut first_visit: HashMap<ChipConfiguration, u64> = HashMap::new();
    first_visit.insert(c0.clone(), 0);
    let mut current = c0.clone();
    for step in 1..=budget {
        current = fire(g, &current)?;
        if let Some(&entry) = first_visit.get(&current) {
            let period = step - entry;
            return Ok(Detection::Periodic(PeriodReport {
                pre_period: entry,
                period,
                classification: classify(period),
                steps_used: step,
            }));
        }
        first_visit.insert(current.clone(), step);
    }
    Ok(Detection::BudgetExhausted {
        last: current,
        steps_used: budget,
    })
}

/// A configuration is fixed iff one firing leaves it unchanged, i.e. every
/// vertex sees a zero net delta.
pub fn is_fixed(g: &Graph, c: &ChipConfiguration) -> Result<bool> {
    let d = crate::dynamics::delta(g, c)?;
    Ok(g.vertices().all(|v| d.net(v) == 0))
}

/// Edge-local tightness certificate: after one firing, every strictly
/// poorer endpoint becomes strictly richer and equal endpoints stay equal.
pub fn has_property_plus(g: &Graph, c: &ChipConfiguration) -> Result<bool> {
    let next = fire(g, c)?;
    for (u, v) in g.edges() {
        // Both conditions amount to the edge ordering reversing exactly.
        if (next[u] - next[v]).signum() != -(c[u] - c[v]).signum() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal `t <= budget` at which the trajectory from `c0` has property
/// plus, or `None` if no such step exists within the budget.
pub fn first_property_plus_time(
    g: &Graph,
    c0: &ChipConfiguration,
    budget: u64,
) -> Result<Option<u64>> {
    let mut current = c0.clone();
    for t in 0..=budget {
        if has_property_plus(g, &current)? {
            return Ok(Some(t));
        }
        if t < budget {
            current = fire(g, &current)?;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::trajectory;

    fn worked_example_graph() -> Graph {
        Graph::from_edge_list(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn worked_example_period_two_preperiod_nine() {
        let g = worked_example_graph();
        let c0 = ChipConfiguration::new(vec![6, 10, 5, 0, 4, 8]);
        let report = detect_period(&g, &c0, 100).unwrap().expect_periodic();
        assert_eq!(report.pre_period, 9);
        assert_eq!(report.period, 2);
        assert_eq!(report.classification, Classification::TightPeriod2);
        assert_eq!(report.steps_used, 11);
    }

    #[test]
    fn constant_config_is_fixed_immediately() {
        let g = Graph::grid(3, 3).unwrap();
        let report = detect_period(&g, &ChipConfiguration::constant(9, 4), 10)
            .unwrap()
            .expect_periodic();
        assert_eq!(report.pre_period, 0);
        assert_eq!(report.period, 1);
        assert_eq!(report.classification, Classification::Fixed);
    }

    #[test]
    fn clique_with_pendants_full_degree() {
        let g = Graph::clique_with_pendants(4, 4).unwrap();
        let c0 = ChipConfiguration::new(
            g.vertices().map(|v| g.degree(v) as i64).collect::<Vec<_>>(),
        );
        let report = detect_period(&g, &c0, 100).unwrap().expect_periodic();
        assert_eq!(report.pre_period, 1);
        assert_eq!(report.period, 2);
    }

    #[test]
    fn budget_exhaustion_carries_last_config() {
        let g = worked_example_graph();
        let c0 = ChipConfiguration::new(vec![6, 10, 5, 0, 4, 8]);
        match detect_period(&g, &c0, 3).unwrap() {
            Detection::BudgetExhausted { last, steps_used } => {
                assert_eq!(steps_used, 3);
                let traj = trajectory(&g, &c0, 3).unwrap();
                assert_eq!(&last, traj.last().unwrap());
            }
            Detection::Periodic(_) => panic!("should not settle in 3 steps"),
        }
    }

    #[test]
    fn is_fixed_examples() {
        let p5 = Graph::path(5).unwrap();
        assert!(is_fixed(&p5, &ChipConfiguration::constant(5, 2)).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert!(!is_fixed(&p3, &ChipConfiguration::new(vec![0, 1, 3])).unwrap());
        let k2 = Graph::complete(2).unwrap();
        assert!(is_fixed(&k2, &ChipConfiguration::new(vec![3, 3])).unwrap());
        assert!(is_fixed(&p5, &ChipConfiguration::zero(3)).is_err());
    }

    #[test]
    fn property_plus_examples() {
        let g = Graph::wheel(7).unwrap();
        assert!(has_property_plus(&g, &ChipConfiguration::constant(7, 1)).unwrap());

        let p4 = Graph::path(4).unwrap();
        assert!(has_property_plus(&p4, &ChipConfiguration::new(vec![1, 2, 2, 1])).unwrap());

        let p3 = Graph::path(3).unwrap();
        assert!(!has_property_plus(&p3, &ChipConfiguration::new(vec![0, 0, 3])).unwrap());
    }

    #[test]
    fn property_plus_implies_two_step_return() {
        let p4 = Graph::path(4).unwrap();
        let c = ChipConfiguration::new(vec![1, 2, 2, 1]);
        let traj = trajectory(&p4, &c, 2).unwrap();
        assert_eq!(traj[0], traj[2]);
    }

    #[test]
    fn first_property_plus_times() {
        let p6 = Graph::path(6).unwrap();
        let full: ChipConfiguration = p6
            .vertices()
            .map(|v| p6.degree(v) as i64)
            .collect::<Vec<_>>()
            .into();
        assert_eq!(first_property_plus_time(&p6, &full, 10).unwrap(), Some(1));

        let g = Graph::cycle(5).unwrap();
        let constant = ChipConfiguration::constant(5, 9);
        assert_eq!(first_property_plus_time(&g, &constant, 10).unwrap(), Some(0));

        let fig1 = worked_example_graph();
        let c0 = ChipConfiguration::new(vec![6, 10, 5, 0, 4, 8]);
        assert_eq!(first_property_plus_time(&fig1, &c0, 100).unwrap(), Some(9));
    }

    #[test]
    fn zero_budget_rejected() {
        let g = Graph::path(2).unwrap();
        let c = ChipConfiguration::zero(2);
        assert!(matches!(
            detect_period(&g, &c, 0),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn report_serializes_with_class_field() {
        let report = PeriodReport {
            pre_period: 9,
            period: 2,
            classification: Classification::TightPeriod2,
            steps_used: 11,
        };
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"pre_period":9,"period":2,"class":"tight_period2","steps_used":11}"#
        );
    }
}
