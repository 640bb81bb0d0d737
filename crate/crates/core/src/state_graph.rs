//! Exhaustive exploration of the configuration digraph restricted to a
//! bounded per-vertex value window.
//!
//! The full configuration digraph over the integers is infinite; this module
//! enumerates the finite slice with a fixed chip total and per-vertex bounds,
//! marks arcs that leave the window as escaped, and walks the functional
//! graph for its cycle census. Any cycle found entirely inside the window is
//! a genuine cycle of the unrestricted digraph.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::dynamics::{fire, ChipConfiguration};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of window configurations.
pub const DEFAULT_NODE_CAP: usize = 10_000_000;

/// Chip total plus inclusive per-vertex value bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigWindow {
    pub total: i64,
    pub lo: i64,
    pub hi: i64,
}

impl ConfigWindow {
    pub fn new(total: i64, lo: i64, hi: i64) -> Result<ConfigWindow> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        Ok(ConfigWindow { total, lo, hi })
    }

    /// The default window `[0, max(total, 0)]` per coordinate, which contains
    /// every nonnegative configuration with the given total.
    pub fn nonnegative(total: i64) -> ConfigWindow {
        ConfigWindow {
            total,
            lo: 0,
            hi: total.max(0),
        }
    }

    /// Whether any length-`n` vector over `[lo, hi]` can reach the total.
    pub fn admits(&self, n: usize) -> bool {
        let n = n as i128;
        n * self.lo as i128 <= self.total as i128 && self.total as i128 <= n * self.hi as i128
    }

    pub fn contains(&self, c: &ChipConfiguration) -> bool {
        c.total() == self.total as i128 && c.iter().all(|&x| self.lo <= x && x <= self.hi)
    }
}

/// All length-`n` integer vectors over `[lo, hi]` summing to the window
/// total, in lexicographic order. Fails once more than `cap` configurations
/// would be produced.
pub fn enumerate_window_capped(
    g: &Graph,
    w: &ConfigWindow,
    cap: usize,
) -> Result<Vec<ChipConfiguration>> {
    let n = g.vertex_count();
    if !w.admits(n) {
        return Err(Error::EmptyWindow);
    }
    let mut out = Vec::new();
    let mut prefix = vec![0i64; n];
    extend(w, n, w.total, 0, &mut prefix, &mut out, cap)?;
    Ok(out)
}

/// [`enumerate_window_capped`] with the default cap.
pub fn enumerate_window(g: &Graph, w: &ConfigWindow) -> Result<Vec<ChipConfiguration>> {
    enumerate_window_capped(g, w, DEFAULT_NODE_CAP)
}

fn extend(
    w: &ConfigWindow,
    n: usize,
    remaining: i64,
    depth: usize,
    prefix: &mut Vec<i64>,
    out: &mut Vec<ChipConfiguration>,
    cap: usize,
) -> Result<()> {
    if depth == n {
        if out.len() >= cap {
            return Err(Error::WindowTooLarge { cap });
        }
        out.push(ChipConfiguration::new(prefix.clone()));
        return Ok(());
    }
    // Keep the suffix feasible: the rest must still be able to hit the total.
    let rest = (n - depth - 1) as i128;
    let min_v = (w.lo as i128).max(remaining as i128 - rest * w.hi as i128);
    let max_v = (w.hi as i128).min(remaining as i128 - rest * w.lo as i128);
    let mut v = min_v;
    while v <= max_v {
        prefix[depth] = v as i64;
        extend(w, n, remaining - v as i64, depth + 1, prefix, out, cap)?;
        v += 1;
    }
    Ok(())
}

/// Successor structure of the window: one out-arc per node (or an escape
/// marker), in-degree histogram, and the cycles found inside the window.
#[derive(Debug, Clone)]
pub struct StateGraphReport {
    /// Window configurations in lexicographic order.
    pub nodes: Vec<ChipConfiguration>,
    /// `successors[i]` is the node index of `fire(nodes[i])`, or `None` when
    /// the image leaves the window.
    pub successors: Vec<Option<usize>>,
    /// in-degree value -> number of nodes with that in-degree.
    pub in_degree_histogram: BTreeMap<usize, usize>,
    /// `(node index of the lexicographically smallest cycle member, length)`.
    pub cycles: Vec<(usize, usize)>,
    pub escaped_count: usize,
}

impl StateGraphReport {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn cycle_configs(&self) -> impl Iterator<Item = (&ChipConfiguration, usize)> {
        self.cycles.iter().map(|&(idx, len)| (&self.nodes[idx], len))
    }
}

/// Summary consumed by the conjecture check: cycle length multiset and
/// whether every cycle has length 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCensus {
    pub lengths: BTreeMap<usize, usize>,
    pub conjecture_holds: bool,
}

/// Fires every window node once, classifies escapes, and walks the
/// functional graph to find all cycles that lie inside the window.
pub fn build_state_graph(g: &Graph, w: &ConfigWindow) -> Result<StateGraphReport> {
    build_state_graph_capped(g, w, DEFAULT_NODE_CAP)
}

pub fn build_state_graph_capped(
    g: &Graph,
    w: &ConfigWindow,
    cap: usize,
) -> Result<StateGraphReport> {
    let nodes = enumerate_window_capped(g, w, cap)?;
    let index: HashMap<&ChipConfiguration, usize> =
        nodes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut successors = Vec::with_capacity(nodes.len());
    for c in &nodes {
        let image = fire(g, c)?;
        successors.push(index.get(&image).copied());
    }
    let escaped_count = successors.iter().filter(|s| s.is_none()).count();

    let mut in_degree = vec![0usize; nodes.len()];
    for s in successors.iter().flatten() {
        in_degree[*s] += 1;
    }
    let mut in_degree_histogram = BTreeMap::new();
    for d in in_degree {
        *in_degree_histogram.entry(d).or_insert(0) += 1;
    }

    let cycles = find_cycles(&successors);
    Ok(StateGraphReport {
        nodes,
        successors,
        in_degree_histogram,
        cycles,
        escaped_count,
    })
}

/// Cycle detection on a partial functional graph by walk colouring.
fn find_cycles(successors: &[Option<usize>]) -> Vec<(usize, usize)> {
    const UNSEEN: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let mut colour = vec![UNSEEN; successors.len()];
    let mut path_pos = vec![usize::MAX; successors.len()];
    let mut cycles = Vec::new();
    for start in 0..successors.len() {
        if colour[start] != UNSEEN {
            continue;
        }
        let mut path = Vec::new();
        let mut current = start;
        loop {
            colour[current] = ON_PATH;
            path_pos[current] = path.len();
            path.push(current);
            match successors[current] {
                Some(next) if colour[next] == UNSEEN => current = next,
                Some(next) if colour[next] == ON_PATH => {
                    let members = &path[path_pos[next]..];
                    let representative = *members.iter().min().unwrap();
                    cycles.push((representative, members.len()));
                    break;
                }
                _ => break, // escaped, or continues into finished territory
            }
        }
        for &v in &path {
            colour[v] = DONE;
            path_pos[v] = usize::MAX;
        }
    }
    cycles.sort_unstable();
    cycles
}

/// All window configurations whose one-firing image equals `c`.
pub fn parents_of(
    g: &Graph,
    c: &ChipConfiguration,
    w: &ConfigWindow,
) -> Result<Vec<ChipConfiguration>> {
    if c.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        });
    }
    let nodes = enumerate_window(g, w)?;
    let mut parents = Vec::new();
    for candidate in nodes {
        if fire(g, &candidate)? == *c {
            parents.push(candidate);
        }
    }
    Ok(parents)
}

/// Cycle length multiset of a report; the conjecture holds on this window
/// iff every cycle has length 1 or 2. Escaped nodes are reported separately
/// because the window gives no evidence about them.
pub fn cycle_census(report: &StateGraphReport) -> CycleCensus {
    let mut lengths = BTreeMap::new();
    for &(_, len) in &report.cycles {
        *lengths.entry(len).or_insert(0usize) += 1;
    }
    let conjecture_holds = lengths.keys().all(|&len| len <= 2);
    CycleCensus {
        lengths,
        conjecture_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_p3_total4_has_15_nodes() {
        let g = Graph::path(3).unwrap();
        let w = ConfigWindow::new(4, 0, 4).unwrap();
        let nodes = enumerate_window(&g, &w).unwrap();
        assert_eq!(nodes.len(), 15);
        assert!(nodes.iter().all(|c| w.contains(c)));
        let mut sorted = nodes.clone();
        sorted.sort_by(|a, b| a.values().cmp(b.values()));
        assert_eq!(nodes, sorted);
    }

    #[test]
    fn enumerate_degenerate_and_empty() {
        let k2 = Graph::complete(2).unwrap();
        let w = ConfigWindow::new(0, 0, 0).unwrap();
        let nodes = enumerate_window(&k2, &w).unwrap();
        assert_eq!(nodes.len(), 1);
        assert_eq!(nodes[0].values(), &[0, 0]);

        let p3 = Graph::path(3).unwrap();
        let w = ConfigWindow::new(10, 0, 2).unwrap();
        assert_eq!(enumerate_window(&p3, &w).unwrap_err(), Error::EmptyWindow);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(3).unwrap();
        let w = ConfigWindow::new(4, 0, 4).unwrap();
        assert_eq!(
            enumerate_window_capped(&g, &w, 10).unwrap_err(),
            Error::WindowTooLarge { cap: 10 }
        );
    }

    #[test]
    fn k2_state_graph_absorbs_into_fixed_point() {
        let g = Graph::complete(2).unwrap();
        let w = ConfigWindow::new(2, 0, 2).unwrap();
        let report = build_state_graph(&g, &w).unwrap();
        assert_eq!(report.node_count(), 3);
        assert_eq!(report.escaped_count, 0);
        assert_eq!(report.cycles.len(), 1);
        let (rep, len) = report.cycle_configs().next().unwrap();
        assert_eq!(rep.values(), &[1, 1]);
        assert_eq!(len, 1);
    }

    #[test]
    fn single_constant_window_is_a_self_loop() {
        let g = Graph::cycle(4).unwrap();
        let w = ConfigWindow::new(8, 2, 2).unwrap();
        let report = build_state_graph(&g, &w).unwrap();
        assert_eq!(report.node_count(), 1);
        assert_eq!(report.cycles, vec![(0, 1)]);
    }

    #[test]
    fn out_degree_is_one_within_window() {
        let g = Graph::path(3).unwrap();
        let w = ConfigWindow::new(4, 0, 4).unwrap();
        let report = build_state_graph(&g, &w).unwrap();
        assert_eq!(report.successors.len(), report.node_count());
        // Every cycle member's successor stays on the cycle.
        for &(rep, len) in &report.cycles {
            let mut cur = rep;
            for _ in 0..len {
                cur = report.successors[cur].expect("cycle arcs stay in the window");
            }
            assert_eq!(cur, rep);
        }
    }

    #[test]
    fn parents_of_p3_example() {
        let g = Graph::path(3).unwrap();
        let w = ConfigWindow::new(4, 0, 4).unwrap();
        let parents = parents_of(&g, &ChipConfiguration::new(vec![1, 1, 2]), &w).unwrap();
        let values: Vec<&[i64]> = parents.iter().map(|c| c.values()).collect();
        assert_eq!(values, vec![&[0, 1, 3][..], &[0, 2, 2][..], &[0, 3, 1][..]]);
    }

    #[test]
    fn parents_of_k2_centre() {
        let g = Graph::complete(2).unwrap();
        let w = ConfigWindow::new(2, 0, 2).unwrap();
        let parents = parents_of(&g, &ChipConfiguration::new(vec![1, 1]), &w).unwrap();
        let values: Vec<&[i64]> = parents.iter().map(|c| c.values()).collect();
        assert_eq!(values, vec![&[0, 2][..], &[1, 1][..], &[2, 0][..]]);
    }

    #[test]
    fn garden_of_eden_has_no_parents() {
        let g = Graph::path(3).unwrap();
        let w = ConfigWindow::new(4, 0, 4).unwrap();
        let parents = parents_of(&g, &ChipConfiguration::new(vec![4, 0, 0]), &w).unwrap();
        assert!(parents.is_empty());
    }

    #[test]
    fn census_flags_long_cycles() {
        let report = StateGraphReport {
            nodes: vec![],
            successors: vec![],
            in_degree_histogram: BTreeMap::new(),
            cycles: vec![(0, 1), (3, 2), (7, 2)],
            escaped_count: 0,
        };
        assert!(cycle_census(&report).conjecture_holds);

        let report = StateGraphReport {
            cycles: vec![(0, 3)],
            ..report
        };
        let census = cycle_census(&report);
        assert!(!census.conjecture_holds);
        assert_eq!(census.lengths.get(&3), Some(&1));
    }

    #[test]
    fn p3_window_census_is_tight() {
        let g = Graph::path(3).unwrap();
        let w = ConfigWindow::new(4, 0, 4).unwrap();
        let report = build_state_graph(&g, &w).unwrap();
        let census = cycle_census(&report);
        assert!(census.conjecture_holds);
        assert!(!report.cycles.is_empty());
    }
}
