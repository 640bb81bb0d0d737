//! `diffuse`: simulate the diffusion game, detect periods, run seeded trial
//! experiments, verify oracles, and explore configuration state graphs.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use diffusion_cli::config::parse_range;
use diffusion_cli::suites::{verify_oracle, SuiteOptions};
use diffusion_cli::trials::run_trials;
use diffusion_cli::{resolve_config, resolve_graph};
use diffusion_core::{
    build_state_graph, cycle_census, detect_period, trajectory, ChipConfiguration, ConfigWindow,
    Detection, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "diffuse", version, about = "Diffusion game simulator and verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Fire a configuration for a fixed number of steps.
    Simulate {
        /// Generator spec (`grid:10x20`, `path:7`, ...) or edge-list file.
        #[arg(long)]
        graph: String,
        /// Preset (`full-degree`, `millpond:V`, `qf:V`, `zero`, `const:K`,
        /// `random:LO..HI`) or configuration file.
        #[arg(long)]
        config: String,
        #[arg(long)]
        steps: usize,
        /// Seed for the `random:` preset.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        out: OutputFormat,
        /// Emit every intermediate configuration, not just the last.
        #[arg(long)]
        emit_trajectory: bool,
    },
    /// Detect the minimal pre-period and period.
    Period {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        config: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run seeded random trials and aggregate the period statistics.
    Trials {
        #[arg(long)]
        graph: String,
        /// Inclusive chip range, e.g. `1..200`.
        #[arg(long)]
        chips: String,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run a named oracle-versus-engine verification suite.
    Oracle {
        /// `millpond`, `qf`, `path-full-degree`, `star-bound`,
        /// `two-value-kn`, or `bounds:<bound_id>`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Trajectory length for the bound suites.
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
    /// Enumerate a configuration window and report its cycle census.
    Stategraph {
        #[arg(long)]
        graph: String,
        /// Chip total of the window.
        #[arg(long)]
        total: i64,
        /// Per-vertex lower bound (default 0).
        #[arg(long)]
        lo: Option<i64>,
        /// Per-vertex upper bound (default max(total, 0)).
        #[arg(long)]
        hi: Option<i64>,
        /// Write the full successor map as CSV to this path.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct SimulateOutput<'a> {
    schema: &'a str,
    graph: &'a str,
    config: &'a str,
    steps: usize,
    n: usize,
    total: i128,
    #[serde(rename = "final")]
    final_config: &'a ChipConfiguration,
    #[serde(skip_serializing_if = "Option::is_none")]
    trajectory: Option<&'a [ChipConfiguration]>,
}

#[derive(Serialize)]
struct PeriodOutput {
    schema: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pre_period: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    period: Option<u64>,
    class: String,
    steps_used: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    last: Option<ChipConfiguration>,
}

#[derive(Serialize)]
struct StateGraphOutput<'a> {
    schema: &'a str,
    graph: &'a str,
    total: i64,
    lo: i64,
    hi: i64,
    node_count: usize,
    escaped_count: usize,
    cycle_lengths: &'a BTreeMap<usize, usize>,
    conjecture_holds: bool,
    in_degree_histogram: &'a BTreeMap<usize, usize>,
}

fn main() -> anyhow::Result<()> {
    configure_threads()?;
    let cli = Cli::parse();
    match cli.command {
        Command::Simulate {
            graph,
            config,
            steps,
            seed,
            out,
            emit_trajectory,
        } => simulate(&graph, &config, steps, seed, out, emit_trajectory),
        Command::Period {
            graph,
            config,
            budget,
            seed,
        } => period(&graph, &config, budget, seed),
        Command::Trials {
            graph,
            chips,
            trials,
            seed,
            budget,
        } => trials_cmd(&graph, &chips, trials, seed, budget),
        Command::Oracle {
            suite,
            seed,
            cases,
            max_vertices,
            budget,
            steps,
        } => oracle(&suite, seed, cases, max_vertices, budget, steps),
        Command::Stategraph {
            graph,
            total,
            lo,
            hi,
            dump,
        } => stategraph(&graph, total, lo, hi, dump),
    }
}

/// `DIFFUSE_THREADS` caps the rayon worker count. Results never depend on
/// the worker count; this only limits CPU usage.
fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("DIFFUSE_THREADS") {
        let threads: usize = value
            .parse()
            .with_context(|| format!("DIFFUSE_THREADS must be a positive integer, got `{value}`"))?;
        if threads == 0 {
            bail!("DIFFUSE_THREADS must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    Ok(())
}

fn simulate(
    graph_spec: &str,
    config_spec: &str,
    steps: usize,
    seed: u64,
    out: OutputFormat,
    emit_trajectory: bool,
) -> anyhow::Result<()> {
    let g = resolve_graph(graph_spec)?;
    let c0 = resolve_config(config_spec, &g, seed)?;
    let traj = trajectory(&g, &c0, steps)?;
    match out {
        OutputFormat::Json => {
            let output = SimulateOutput {
                schema: "diffuse.simulate/1",
                graph: graph_spec,
                config: config_spec,
                steps,
                n: g.vertex_count(),
                total: c0.total(),
                final_config: traj.last().unwrap(),
                trajectory: emit_trajectory.then_some(&traj[..]),
            };
            println!("{}", serde_json::to_string_pretty(&output)?);
        }
        OutputFormat::Csv => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            write!(w, "t")?;
            for v in g.vertices() {
                write!(w, ",v{v}")?;
            }
            writeln!(w)?;
            let rows: Box<dyn Iterator<Item = (usize, &ChipConfiguration)>> = if emit_trajectory {
                Box::new(traj.iter().enumerate())
            } else {
                Box::new(std::iter::once((steps, traj.last().unwrap())))
            };
            for (t, c) in rows {
                write!(w, "{t}")?;
                for &x in c.iter() {
                    write!(w, ",{x}")?;
                }
                writeln!(w)?;
            }
        }
    }
    Ok(())
}

fn period(graph_spec: &str, config_spec: &str, budget: u64, seed: u64) -> anyhow::Result<()> {
    let g = resolve_graph(graph_spec)?;
    let c0 = resolve_config(config_spec, &g, seed)?;
    let output = match detect_period(&g, &c0, budget)? {
        Detection::Periodic(report) => PeriodOutput {
            schema: "diffuse.period/1",
            pre_period: Some(report.pre_period),
            period: Some(report.period),
            class: serde_json::to_value(report.classification)?
                .as_str()
                .unwrap()
                .to_string(),
            steps_used: report.steps_used,
            last: None,
        },
        Detection::BudgetExhausted { last, steps_used } => PeriodOutput {
            schema: "diffuse.period/1",
            pre_period: None,
            period: None,
            class: "budget_exhausted".to_string(),
            steps_used,
            last: Some(last),
        },
    };
    println!("{}", serde_json::to_string_pretty(&output)?);
    Ok(())
}

fn trials_cmd(
    graph_spec: &str,
    chips: &str,
    trials: u64,
    seed: u64,
    budget: u64,
) -> anyhow::Result<()> {
    let g = resolve_graph(graph_spec)?;
    let (lo, hi) =
        parse_range(chips).with_context(|| format!("--chips expects LO..HI, got `{chips}`"))?;
    let summary = run_trials(&g, graph_spec, lo, hi, trials, seed, budget)?;
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}

fn oracle(
    suite: &str,
    seed: u64,
    cases: u64,
    max_vertices: usize,
    budget: u64,
    steps: usize,
) -> anyhow::Result<()> {
    let opts = SuiteOptions {
        seed,
        cases,
        max_vertices,
        budget,
        steps,
    };
    let report = verify_oracle(suite, &opts)?;
    for failure in &report.failures {
        println!("FAIL {failure}");
    }
    if report.passed() {
        println!("suite {}: PASS ({} checks)", report.suite, report.checks);
        Ok(())
    } else {
        println!(
            "suite {}: FAIL ({} of {} checks)",
            report.suite,
            report.failures.len(),
            report.checks
        );
        std::process::exit(1);
    }
}

fn stategraph(
    graph_spec: &str,
    total: i64,
    lo: Option<i64>,
    hi: Option<i64>,
    dump: Option<PathBuf>,
) -> anyhow::Result<()> {
    let g = resolve_graph(graph_spec)?;
    let default = ConfigWindow::nonnegative(total);
    let w = ConfigWindow::new(total, lo.unwrap_or(default.lo), hi.unwrap_or(default.hi))?;
    let report = build_state_graph(&g, &w)?;
    let census = cycle_census(&report);
    if let Some(path) = dump {
        let mut out = String::from("from,to\n");
        for (i, succ) in report.successors.iter().enumerate() {
            let from = join_config(&report.nodes[i]);
            match succ {
                Some(s) => out.push_str(&format!("{from},{}\n", join_config(&report.nodes[*s]))),
                None => out.push_str(&format!("{from},escaped\n")),
            }
        }
        std::fs::write(&path, out)
            .with_context(|| format!("cannot write dump to {}", path.display()))?;
    }
    let output = StateGraphOutput {
        schema: "diffuse.stategraph/1",
        graph: graph_spec,
        total: w.total,
        lo: w.lo,
        hi: w.hi,
        node_count: report.node_count(),
        escaped_count: report.escaped_count,
        cycle_lengths: &census.lengths,
        conjecture_holds: census.conjecture_holds,
        in_degree_histogram: &report.in_degree_histogram,
    };
    println!("{}", serde_json::to_string_pretty(&output)?);
    if !census.conjecture_holds {
        // A cycle longer than 2 would be a counterexample to the period-2
        // conjecture; make it impossible to miss.
        eprintln!("WARNING: cycle of length > 2 found; see cycle_lengths");
    }
    Ok(())
}

fn join_config(c: &ChipConfiguration) -> String {
    c.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
