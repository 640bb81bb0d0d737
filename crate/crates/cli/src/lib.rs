//! Experiment harness for the diffusion game toolkit: seeded randomness,
//! random-trial experiments, oracle verification suites, and the input
//! parsing shared with the `diffuse` binary.

pub mod config;
pub mod gen;
pub mod rng;
pub mod suites;
pub mod trials;

use std::path::Path;

use thiserror::Error;

use diffusion_core::Graph;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown oracle suite `{0}`")]
    UnknownSuite(String),

    #[error("{0}")]
    BadSpec(String),

    #[error(transparent)]
    Core(#[from] diffusion_core::Error),

    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Resolves `--graph`: a generator spec such as `grid:10x20` when the family
/// prefix is recognised, otherwise an edge-list file.
pub fn resolve_graph(spec: &str) -> Result<Graph, HarnessError> {
    const FAMILIES: [&str; 8] = [
        "path",
        "cycle",
        "wheel",
        "complete",
        "star",
        "bipartite",
        "grid",
        "kpend",
    ];
    if let Some((name, _)) = spec.split_once(':') {
        if FAMILIES.contains(&name) {
            return Ok(Graph::from_spec(spec)?);
        }
    }
    let text = std::fs::read_to_string(Path::new(spec)).map_err(|source| HarnessError::Io {
        path: spec.to_string(),
        source,
    })?;
    Ok(Graph::from_edge_list_text(&text)?)
}

/// Resolves `--config`: a named preset first, else a configuration file.
pub fn resolve_config(
    spec: &str,
    g: &Graph,
    seed: u64,
) -> Result<diffusion_core::ChipConfiguration, HarnessError> {
    match config::ConfigSpec::parse(spec) {
        Ok(preset) => preset.realize(g, seed),
        Err(_) => {
            let text =
                std::fs::read_to_string(Path::new(spec)).map_err(|source| HarnessError::Io {
                    path: spec.to_string(),
                    source,
                })?;
            config::parse_config_text(&text, g.vertex_count())
        }
    }
}
