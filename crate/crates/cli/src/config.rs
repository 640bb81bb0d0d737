//! Chip-configuration input surface: named presets and configuration files.

use diffusion_core::{full_degree_config, millpond_config, qf_config, ChipConfiguration, Graph};

use crate::rng::random_config;
use crate::HarnessError;

/// Named configuration presets accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigSpec {
    FullDegree,
    Zero,
    Const(i64),
    MillPond(usize),
    Qf(usize),
    Random { lo: i64, hi: i64 },
}

impl ConfigSpec {
    /// Parses `full-degree`, `zero`, `const:K`, `millpond:V`, `qf:V`, or
    /// `random:LO..HI`.
    pub fn parse(s: &str) -> Result<ConfigSpec, HarnessError> {
        match s {
            "full-degree" => return Ok(ConfigSpec::FullDegree),
            "zero" => return Ok(ConfigSpec::Zero),
            _ => {}
        }
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| HarnessError::BadSpec(format!("unknown config preset `{s}`")))?;
        match name {
            "const" => Ok(ConfigSpec::Const(parse_int(arg, s)?)),
            "millpond" => Ok(ConfigSpec::MillPond(parse_vertex(arg, s)?)),
            "qf" => Ok(ConfigSpec::Qf(parse_vertex(arg, s)?)),
            "random" => {
                let (lo, hi) = parse_range(arg)
                    .ok_or_else(|| HarnessError::BadSpec(format!("bad range in `{s}`")))?;
                Ok(ConfigSpec::Random { lo, hi })
            }
            _ => Err(HarnessError::BadSpec(format!("unknown config preset `{s}`"))),
        }
    }

    /// Builds the concrete configuration for `g`; `seed` feeds the random
    /// preset and is ignored by the deterministic ones.
    pub fn realize(&self, g: &Graph, seed: u64) -> Result<ChipConfiguration, HarnessError> {
        let n = g.vertex_count();
        Ok(match *self {
            ConfigSpec::FullDegree => full_degree_config(g),
            ConfigSpec::Zero => ChipConfiguration::zero(n),
            ConfigSpec::Const(k) => ChipConfiguration::constant(n, k),
            ConfigSpec::MillPond(v) => millpond_config(g, v)?,
            ConfigSpec::Qf(v) => qf_config(g, v)?,
            ConfigSpec::Random { lo, hi } => random_config(g, lo, hi, seed)?,
        })
    }
}

fn parse_int(arg: &str, whole: &str) -> Result<i64, HarnessError> {
    arg.parse()
        .map_err(|_| HarnessError::BadSpec(format!("bad integer `{arg}` in `{whole}`")))
}

fn parse_vertex(arg: &str, whole: &str) -> Result<usize, HarnessError> {
    arg.parse()
        .map_err(|_| HarnessError::BadSpec(format!("bad vertex index `{arg}` in `{whole}`")))
}

/// Parses `LO..HI` into an inclusive integer range.
pub fn parse_range(s: &str) -> Option<(i64, i64)> {
    let (lo, hi) = s.split_once("..")?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}

/// Parses a configuration file: either whitespace-separated integers or a
/// JSON array. Length must match the vertex count.
pub fn parse_config_text(text: &str, n: usize) -> Result<ChipConfiguration, HarnessError> {
    let trimmed = text.trim();
    let values: Vec<i64> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed)
            .map_err(|e| HarnessError::BadSpec(format!("bad JSON config: {e}")))?
    } else {
        trimmed
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| HarnessError::BadSpec(format!("bad integer `{t}` in config")))
            })
            .collect::<Result<_, _>>()?
    };
    if values.len() != n {
        return Err(HarnessError::Core(diffusion_core::Error::LengthMismatch {
            expected: n,
            got: values.len(),
        }));
    }
    Ok(ChipConfiguration::new(values))
}
