//! Named oracle-versus-engine verification suites.
//!
//! Each suite sweeps a parameter grid, compares a closed-form oracle (or a
//! theorem bound) against the simulation engine, and collects counterexample
//! descriptions on mismatch. Suites are deterministic for a fixed seed.

use serde::Serialize;

use diffusion_core::{
    check_bound, complete_two_value_predict, detect_period, full_degree_config, millpond_config,
    millpond_predict, path_full_degree_predict, path_meet_time, qf_config, star_preperiod_bound,
    trajectory, BoundId, ChipConfiguration, Classification, Graph,
};

use crate::gen::random_bipartite;
use crate::rng::{mix_seed, random_config, seeded_rng};
use crate::HarnessError;

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    pub cases: u64,
    pub max_vertices: usize,
    pub budget: u64,
    pub steps: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            cases: 100,
            max_vertices: 40,
            budget: diffusion_core::DEFAULT_BUDGET,
            steps: 100,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the named suite: `millpond`, `qf`, `path-full-degree`, `star-bound`,
/// `two-value-kn`, or `bounds:<bound_id>`.
pub fn verify_oracle(suite: &str, opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    match suite {
        "millpond" => millpond_suite(opts),
        "qf" => qf_suite(opts),
        "path-full-degree" => path_suite(opts),
        "star-bound" => star_suite(opts),
        "two-value-kn" => two_value_suite(opts),
        _ => {
            if let Some(id) = suite.strip_prefix("bounds:") {
                let bound: BoundId = id
                    .parse()
                    .map_err(|_| HarnessError::UnknownSuite(suite.to_string()))?;
                bounds_suite(bound, opts)
            } else {
                Err(HarnessError::UnknownSuite(suite.to_string()))
            }
        }
    }
}

fn millpond_suite(opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let mut report = SuiteReport::new("millpond");
    for case in 0..opts.cases {
        let mut rng = seeded_rng(mix_seed(opts.seed, case));
        let g = random_bipartite(case, opts.max_vertices, &mut rng);
        for v in g.vertices() {
            let d = g.layer_decomposition(v)?;
            let ecc = d.eccentricity();
            let mp = millpond_config(&g, v)?;
            let traj = trajectory(&g, &mp, 2 * ecc + 4)?;
            for (t, step) in traj.iter().enumerate() {
                report.checks += 1;
                let predicted = millpond_predict(&d, &g, t as u64)?;
                if &predicted != step {
                    report.failures.push(format!(
                        "case {case}: predict != simulate at v={v}, t={t} on {}-vertex graph \
                         (predicted {:?}, got {:?})",
                        g.vertex_count(),
                        predicted.values(),
                        step.values()
                    ));
                }
            }
            report.checks += 1;
            match detect_period(&g, &mp, opts.budget)?.report() {
                Some(r) if r.period <= 2 && (r.pre_period as usize) < ecc.max(1) => {}
                Some(r) => report.failures.push(format!(
                    "case {case}: detection (pre {}, period {}) outside bound ecc-1={} at v={v}",
                    r.pre_period,
                    r.period,
                    ecc - 1
                )),
                None => report
                    .failures
                    .push(format!("case {case}: budget exhausted at v={v}")),
            }
        }
    }
    Ok(report)
}

fn qf_suite(opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let mut report = SuiteReport::new("qf");
    for case in 0..opts.cases {
        let mut rng = seeded_rng(mix_seed(opts.seed, case));
        let g = random_bipartite(case, opts.max_vertices, &mut rng);
        for v in g.vertices() {
            let d = g.layer_decomposition(v)?;
            // The shifted tracking needs depth and no pendant neighbours.
            if d.eccentricity() < 2 || g.neighbours(v).iter().any(|&x| d.deg_down(x) == 0) {
                continue;
            }
            let traj = trajectory(&g, &qf_config(&g, v)?, 2 * d.eccentricity() + 4)?;
            for (t, step) in traj.iter().enumerate() {
                report.checks += 1;
                let mut values = millpond_predict(&d, &g, t as u64 + 1)?.values().to_vec();
                values[v] -= 1;
                if step.values() != values {
                    report.failures.push(format!(
                        "case {case}: qf tracking failed at v={v}, t={t} on {}-vertex graph",
                        g.vertex_count()
                    ));
                }
            }
        }
    }
    Ok(report)
}

fn path_suite(opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let mut report = SuiteReport::new("path-full-degree");
    let max_n = opts.max_vertices.max(3);
    for n in 3..=max_n {
        let g = Graph::path(n)?;
        let c0 = full_degree_config(&g);
        let traj = trajectory(&g, &c0, n)?;
        for (t, step) in traj.iter().enumerate() {
            report.checks += 1;
            let predicted = path_full_degree_predict(n, t as u64)?;
            if &predicted != step {
                report
                    .failures
                    .push(format!("path n={n}: predict != simulate at t={t}"));
            }
        }
        report.checks += 1;
        match detect_period(&g, &c0, opts.budget)?.report() {
            Some(r) if r.period == 2 && r.pre_period == path_meet_time(n)? => {}
            Some(r) => report.failures.push(format!(
                "path n={n}: expected (pre {}, period 2), got (pre {}, period {})",
                path_meet_time(n)?,
                r.pre_period,
                r.period
            )),
            None => report.failures.push(format!("path n={n}: budget exhausted")),
        }
    }
    Ok(report)
}

fn star_suite(opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let mut report = SuiteReport::new("star-bound");
    let max_n = opts.max_vertices.clamp(2, 50);
    for case in 0..opts.cases {
        let mut rng = seeded_rng(mix_seed(opts.seed, case));
        let n = {
            use rand::Rng;
            rng.random_range(2..=max_n)
        };
        let g = Graph::star(n)?;
        let c0 = random_config(&g, -20, 20, mix_seed(opts.seed, case.wrapping_add(1 << 32)))?;
        let bound = star_preperiod_bound(&g, &c0)?;
        report.checks += 1;
        match detect_period(&g, &c0, opts.budget)?.report() {
            Some(r) => {
                let tight = matches!(
                    r.classification,
                    Classification::Fixed | Classification::TightPeriod2
                );
                if !tight || r.pre_period > bound {
                    report.failures.push(format!(
                        "case {case}: star n={n} config {:?} gave (pre {}, period {}), bound {bound}",
                        c0.values(),
                        r.pre_period,
                        r.period
                    ));
                }
            }
            None => report
                .failures
                .push(format!("case {case}: star n={n} budget exhausted")),
        }
    }
    Ok(report)
}

fn two_value_suite(opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let mut report = SuiteReport::new("two-value-kn");
    let max_n = opts.max_vertices.clamp(2, 30);
    for case in 0..opts.cases {
        let mut rng = seeded_rng(mix_seed(opts.seed, case));
        let (n, d, alpha, beta) = {
            use rand::Rng;
            let n = rng.random_range(2..=max_n);
            let d = rng.random_range(1..n);
            (n, d, rng.random_range(-50..=50i64), rng.random_range(-50..=50i64))
        };
        let g = Graph::complete(n)?;
        let mut values = vec![alpha; d];
        values.extend(vec![beta; n - d]);
        let traj = trajectory(&g, &ChipConfiguration::new(values), 30)?;
        for (t, c) in traj.iter().enumerate() {
            report.checks += 1;
            let (a, b) = complete_two_value_predict(n, d, alpha, beta, t as u64)?;
            let groups_match = c.values()[..d].iter().all(|&x| x == a)
                && c.values()[d..].iter().all(|&x| x == b);
            if !groups_match {
                report.failures.push(format!(
                    "case {case}: K_{n} d={d} alpha={alpha} beta={beta} diverged at t={t}"
                ));
            }
        }
    }
    Ok(report)
}

fn bounds_suite(bound: BoundId, opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let mut report = SuiteReport::new(&format!("bounds:{bound}"));
    for case in 0..opts.cases {
        let mut rng = seeded_rng(mix_seed(opts.seed, case));
        let g = bound_family_graph(bound, case, &mut rng)?;
        let c0 = random_config(&g, -30, 30, mix_seed(opts.seed, case.wrapping_add(1 << 33)))?;
        let traj = trajectory(&g, &c0, opts.steps)?;
        report.checks += 1;
        let result = check_bound(bound, &g, &traj)?;
        if let Some(v) = result.first_violation {
            report.failures.push(format!(
                "case {case}: {bound} violated on {}-vertex graph at t={}, pair {:?}: {} > {}",
                g.vertex_count(),
                v.time,
                v.pair,
                v.observed,
                v.bound
            ));
        }
    }
    Ok(report)
}

fn bound_family_graph(
    bound: BoundId,
    case: u64,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Result<Graph, HarnessError> {
    use rand::Rng;
    let g = match bound {
        BoundId::Deg2Edge => {
            let n = rng.random_range(3..=12);
            if case.is_multiple_of(2) {
                Graph::path(n)?
            } else {
                Graph::cycle(n)?
            }
        }
        BoundId::TwinPair | BoundId::TwinLock => match case % 3 {
            0 => Graph::complete(rng.random_range(2..=10))?,
            1 => Graph::complete_bipartite(rng.random_range(1..=5), rng.random_range(2..=5))?,
            _ => Graph::star(rng.random_range(3..=12))?,
        },
        BoundId::WheelRim | BoundId::WheelHub => Graph::wheel(4 + (case as usize % 9))?,
    };
    Ok(g)
}
