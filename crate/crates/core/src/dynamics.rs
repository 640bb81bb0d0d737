//! The diffusion-game firing rule and trajectory generation.
//!
//! One firing is synchronous: every vertex simultaneously sends one chip to
//! each strictly poorer neighbour and receives one chip from each strictly
//! richer neighbour. Equal neighbours exchange nothing. All arithmetic is
//! 64-bit signed with explicit overflow detection; entries may go negative.

use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Integer chip counts indexed by vertex. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChipConfiguration {
    values: Vec<i64>,
}

impl ChipConfiguration {
    pub fn new(values: Vec<i64>) -> Self {
        ChipConfiguration { values }
    }

    pub fn zero(n: usize) -> Self {
        ChipConfiguration { values: vec![0; n] }
    }

    pub fn constant(n: usize, k: i64) -> Self {
        ChipConfiguration { values: vec![k; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Chip sum, widened so that it cannot itself overflow.
    pub fn total(&self) -> i128 {
        self.values.iter().map(|&v| v as i128).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.values.iter()
    }
}

impl Index<usize> for ChipConfiguration {
    type Output = i64;

    fn index(&self, v: usize) -> &i64 {
        &self.values[v]
    }
}

impl From<Vec<i64>> for ChipConfiguration {
    fn from(values: Vec<i64>) -> Self {
        ChipConfiguration { values }
    }
}

/// Per-vertex counts of strictly richer and strictly poorer neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl DeltaVector {
    /// Number of strictly richer neighbours of `v`.
    pub fn plus(&self, v: usize) -> usize {
        self.plus[v]
    }

    /// Number of strictly poorer neighbours of `v`.
    pub fn minus(&self, v: usize) -> usize {
        self.minus[v]
    }

    /// Net chip change of `v` in one firing.
    pub fn net(&self, v: usize) -> i64 {
        self.plus[v] as i64 - self.minus[v] as i64
    }

    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }
}

fn check_length(g: &Graph, c: &ChipConfiguration) -> Result<()> {
    if c.len() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        })
    }
}

/// Counts each vertex's strictly richer and strictly poorer neighbours.
pub fn delta(g: &Graph, c: &ChipConfiguration) -> Result<DeltaVector> {
    check_length(g, c)?;
    let n = g.vertex_count();
    let mut plus = vec![0; n];
    let mut minus = vec![0; n];
    for v in g.vertices() {
        for &w in g.neighbours(v) {
            if c[w] > c[v] {
                plus[v] += 1;
            } else if c[w] < c[v] {
                minus[v] += 1;
            }
        }
    }
    Ok(DeltaVector { plus, minus })
}

/// One synchronous firing: `c'(v) = c(v) + Δ⁺(v) − Δ⁻(v)`, computed from a
/// frozen snapshot of `c`.
pub fn fire(g: &Graph, c: &ChipConfiguration) -> Result<ChipConfiguration> {
    let d = delta(g, c)?;
    let values = g
        .vertices()
        .map(|v| c[v].checked_add(d.net(v)).ok_or(Error::IntegerOverflow))
        .collect::<Result<Vec<i64>>>()?;
    let next = ChipConfiguration::new(values);
    assert_eq!(next.total(), c.total(), "firing must conserve chips");
    Ok(next)
}

/// `[c_0, c_1, ..., c_steps]` under repeated firing; `steps + 1` entries.
pub fn trajectory(g: &Graph, c0: &ChipConfiguration, steps: usize) -> Result<Vec<ChipConfiguration>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(c0.clone());
    for _ in 0..steps {
        let next = fire(g, out.last().unwrap())?;
        out.push(next);
    }
    Ok(out)
}

/// Adds `k` chips to every vertex. The dynamics are invariant under this.
pub fn shift(c: &ChipConfiguration, k: i64) -> Result<ChipConfiguration> {
    let values = c
        .iter()
        .map(|&v| v.checked_add(k).ok_or(Error::IntegerOverflow))
        .collect::<Result<Vec<i64>>>()?;
    Ok(ChipConfiguration::new(values))
}
