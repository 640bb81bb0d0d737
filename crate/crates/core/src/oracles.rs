//! Closed-form predictors and bound monitors for the graph families with
//! proven behaviour, each independently checkable against the simulation
//! engine.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dynamics::{fire, ChipConfiguration};
use crate::error::{Error, Result};
use crate::graph::{Graph, LayerDecomposition};

/// Every vertex starts with degree-many chips; the total is `2|E|`.
pub fn full_degree_config(g: &Graph) -> ChipConfiguration {
    ChipConfiguration::new(g.vertices().map(|v| g.degree(v) as i64).collect())
}

/// One chip at `v`, zero everywhere else.
pub fn millpond_config(g: &Graph, v: usize) -> Result<ChipConfiguration> {
    g.check_vertex(v)?;
    let mut values = vec![0; g.vertex_count()];
    values[v] = 1;
    Ok(ChipConfiguration::new(values))
}

/// The zero configuration after `v` pre-emptively sends one chip to each
/// neighbour: `-deg(v)` at `v`, `1` on `N(v)`, `0` elsewhere. Total 0.
pub fn qf_config(g: &Graph, v: usize) -> Result<ChipConfiguration> {
    g.check_vertex(v)?;
    let mut values = vec![0i64; g.vertex_count()];
    values[v] = -(g.degree(v) as i64);
    for &x in g.neighbours(v) {
        values[x] = 1;
    }
    Ok(ChipConfiguration::new(values))
}

/// Predicted configuration at time `t` for a mill-pond started at the source
/// of `d`, valid on connected bipartite graphs.
///
/// The source holds 1 at even times and `1 - deg(v)` at odd times; a vertex
/// in layer `i >= 1` holds 0 before the wave arrives (`t < i`), `deg⁺(x)`
/// when `t - i` is even, and `-deg⁻(x)` when `t - i` is odd.
pub fn millpond_predict(
    d: &LayerDecomposition,
    g: &Graph,
    t: u64,
) -> Result<ChipConfiguration> {
    if d.vertex_count() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: d.vertex_count(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected {
            start: d.source(),
            unreachable: g.bfs_distances(d.source()).iter().position(|x| x.is_none()).unwrap_or(0),
        });
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let v = d.source();
    let mut values = vec![0i64; g.vertex_count()];
    values[v] = if t.is_multiple_of(2) {
        1
    } else {
        1 - g.degree(v) as i64
    };
    for (i, layer) in d.layers().iter().enumerate().skip(1) {
        for &x in layer {
            values[x] = if t < i as u64 {
                0
            } else if (t - i as u64).is_multiple_of(2) {
                d.deg_up(x) as i64
            } else {
                -(d.deg_down(x) as i64)
            };
        }
    }
    Ok(ChipConfiguration::new(values))
}

/// Time at which the two end waves of a full-degree path meet: `⌊(n-3)/2⌋`.
/// This is also the minimal pre-period of the full-degree configuration.
pub fn path_meet_time(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidSize(format!(
            "path predictor needs n >= 3, got {n}"
        )));
    }
    Ok(((n - 3) / 2) as u64)
}

/// Value of the one-way infinite path word at time `t`, position `pos`
/// (1-indexed): `(13)^k 1 222...` at `t = 2k` and `2 (13)^k 1 222...` at
/// `t = 2k + 1`.
fn infinite_path_word(t: u64, pos: usize) -> i64 {
    if t.is_multiple_of(2) {
        let k = (t / 2) as usize;
        if pos <= 2 * k {
            if pos % 2 == 1 {
                1
            } else {
                3
            }
        } else if pos == 2 * k + 1 {
            1
        } else {
            2
        }
    } else {
        let k = ((t - 1) / 2) as usize;
        if pos == 1 {
            2
        } else if pos <= 2 * k + 1 {
            if pos.is_multiple_of(2) {
                1
            } else {
                3
            }
        } else if pos == 2 * k + 2 {
            1
        } else {
            2
        }
    }
}

/// Predicted configuration of `P_n` at time `t` from the full-degree start.
///
/// Before the waves meet, both ends follow the infinite-path word; from the
/// meet time on, the configuration alternates between the meet-time word and
/// its one-firing image with period 2.
pub fn path_full_degree_predict(n: usize, t: u64) -> Result<ChipConfiguration> {
    let meet = path_meet_time(n)?;
    let word_at = |time: u64| {
        ChipConfiguration::new(
            (1..=n)
                .map(|pos| infinite_path_word(time, pos.min(n + 1 - pos)))
                .collect(),
        )
    };
    if t <= meet {
        Ok(word_at(t))
    } else if (t - meet).is_multiple_of(2) {
        Ok(word_at(meet))
    } else {
        fire(&Graph::path(n)?, &word_at(meet))
    }
}

fn star_centre(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 1 {
        return Ok(0);
    }
    if g.edge_count() != n - 1 {
        return Err(Error::NotAStar);
    }
    let centre = g
        .vertices()
        .find(|&v| g.degree(v) == n - 1)
        .ok_or(Error::NotAStar)?;
    if g.vertices().any(|v| v != centre && g.degree(v) != 1) {
        return Err(Error::NotAStar);
    }
    Ok(centre)
}

/// Upper bound on the pre-period of an arbitrary configuration on a star:
/// `⌈max{0, c0(v) - c0(ℓ_M), c0(ℓ_m) - c0(v)} / (deg(v)+1)⌉ + 2·d0`, where
/// `ℓ_M`/`ℓ_m` are richest/poorest leaves and `d0` their initial difference.
pub fn star_preperiod_bound(g: &Graph, c0: &ChipConfiguration) -> Result<u64> {
    if c0.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: c0.len(),
        });
    }
    let centre = star_centre(g)?;
    let leaves: Vec<i64> = g
        .vertices()
        .filter(|&v| v != centre)
        .map(|v| c0[v])
        .collect();
    if leaves.is_empty() {
        return Ok(0);
    }
    let leaf_max = *leaves.iter().max().unwrap();
    let leaf_min = *leaves.iter().min().unwrap();
    let spread = (leaf_max - leaf_min) as u64;
    let excess = 0i64
        .max(c0[centre] - leaf_max)
        .max(leaf_min - c0[centre]) as u64;
    let denom = g.degree(centre) as u64 + 1;
    Ok(excess.div_ceil(denom) + 2 * spread)
}

/// Group values `(a_t, b_t)` on `K_n` when `d` vertices start at `alpha` and
/// the rest at `beta`.
///
/// While strictly ordered, the poorer group gains the other group's size per
/// step and the richer loses; once the order flips the pair 2-cycles, and on
/// equality it freezes. The second component is vacuous when `d = n`.
pub fn complete_two_value_predict(
    n: usize,
    d: usize,
    alpha: i64,
    beta: i64,
    t: u64,
) -> Result<(i64, i64)> {
    if n < 1 || d < 1 || d > n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    if d == n {
        return Ok((alpha, beta));
    }
    let gain_a = (n - d) as i64;
    let gain_b = d as i64;
    let (mut a, mut b) = (alpha, beta);
    let mut step = 0u64;
    while step < t && a != b {
        let (na, nb) = if a < b {
            (a + gain_a, b - gain_b)
        } else {
            (a - gain_a, b + gain_b)
        };
        step += 1;
        let flipped = na != nb && (na - nb).signum() == -(a - b).signum();
        if flipped {
            // From here the pair alternates between (a, b) and (na, nb).
            if (t - step).is_multiple_of(2) {
                return Ok((na, nb));
            }
            return Ok((a, b));
        }
        a = na;
        b = nb;
    }
    Ok((a, b))
}

/// Theorem-backed trajectory monitors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// Adjacent `deg(u)=2`, `deg(v)<=2` pair: difference never exceeds
    /// `max{3, previous difference}` across one firing.
    Deg2Edge,
    /// Twin pair: difference capped by `max{initial difference, 2 deg(u)}`.
    TwinPair,
    /// Twins that reach equal values stay equal forever.
    TwinLock,
    /// Adjacent rim pair on a wheel: below 3 the difference can jump to at
    /// most 6; at 3 or above it never grows.
    WheelRim,
    /// Hub-to-rim difference on a wheel capped by the explicit constant
    /// built from initial rim differences.
    WheelHub,
}

impl BoundId {
    pub fn name(self) -> &'static str {
        match self {
            BoundId::Deg2Edge => "deg2_edge",
            BoundId::TwinPair => "twin_pair",
            BoundId::TwinLock => "twin_lock",
            BoundId::WheelRim => "wheel_rim",
            BoundId::WheelHub => "wheel_hub",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundId> {
        match s {
            "deg2_edge" => Ok(BoundId::Deg2Edge),
            "twin_pair" => Ok(BoundId::TwinPair),
            "twin_lock" => Ok(BoundId::TwinLock),
            "wheel_rim" => Ok(BoundId::WheelRim),
            "wheel_hub" => Ok(BoundId::WheelHub),
            other => Err(Error::InvalidParams(format!("unknown bound id `{other}`"))),
        }
    }
}

/// First place a bound failed: when, where, and by how much.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub time: u64,
    pub pair: (usize, usize),
    pub observed: i64,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub first_violation: Option<Violation>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Recovers `(hub, rim in cycle order)` if `g` is a wheel.
fn wheel_structure(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    if n < 4 {
        return None;
    }
    let hub = g.vertices().find(|&v| g.degree(v) == n - 1)?;
    if g.vertices().any(|v| v != hub && g.degree(v) != 3) {
        return None;
    }
    // Walk the rim cycle starting from the smallest rim vertex.
    let start = g.vertices().find(|&v| v != hub)?;
    let mut order = vec![start];
    let mut prev = hub; // sentinel: never a rim neighbour choice
    let mut current = start;
    loop {
        let next = g
            .neighbours(current)
            .iter()
            .copied()
            .find(|&w| w != hub && w != prev)?;
        if next == start {
            break;
        }
        order.push(next);
        prev = current;
        current = next;
    }
    if order.len() == n - 1 {
        Some((hub, order))
    } else {
        None
    }
}

fn check_lengths(g: &Graph, traj: &[ChipConfiguration]) -> Result<()> {
    for c in traj {
        if c.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                got: c.len(),
            });
        }
    }
    Ok(())
}

/// Checks the named theorem bound along a trajectory, reporting the first
/// violation if any. A violation of one of these bounds indicates an engine
/// bug, not a property of the input.
pub fn check_bound(
    bound_id: BoundId,
    g: &Graph,
    traj: &[ChipConfiguration],
) -> Result<BoundReport> {
    check_lengths(g, traj)?;
    if traj.is_empty() {
        return Err(Error::InvalidParams("empty trajectory".into()));
    }
    let violation = match bound_id {
        BoundId::Deg2Edge => check_deg2_edge(g, traj)?,
        BoundId::TwinPair => check_twin_pair(g, traj)?,
        BoundId::TwinLock => check_twin_lock(g, traj)?,
        BoundId::WheelRim => check_wheel_rim(g, traj)?,
        BoundId::WheelHub => check_wheel_hub(g, traj)?,
    };
    Ok(BoundReport {
        bound_id,
        first_violation: violation,
    })
}

fn check_deg2_edge(g: &Graph, traj: &[ChipConfiguration]) -> Result<Option<Violation>> {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| g.degree(u).max(g.degree(v)) == 2)
        .collect();
    if edges.is_empty() {
        return Err(Error::BoundInapplicable(BoundId::Deg2Edge.name()));
    }
    for (t, pair) in traj.windows(2).enumerate() {
        for &(u, v) in &edges {
            let prev = (pair[0][u] - pair[0][v]).abs();
            let next = (pair[1][u] - pair[1][v]).abs();
            let bound = prev.max(3);
            if next > bound {
                return Ok(Some(Violation {
                    time: t as u64 + 1,
                    pair: (u, v),
                    observed: next,
                    bound,
                }));
            }
        }
    }
    Ok(None)
}

fn check_twin_pair(g: &Graph, traj: &[ChipConfiguration]) -> Result<Option<Violation>> {
    let twins = g.twins();
    if twins.is_empty() {
        return Err(Error::BoundInapplicable(BoundId::TwinPair.name()));
    }
    let c0 = &traj[0];
    for &(u, v, _) in &twins {
        let bound = (c0[u] - c0[v]).abs().max(2 * g.degree(u) as i64);
        for (t, c) in traj.iter().enumerate() {
            let observed = (c[u] - c[v]).abs();
            if observed > bound {
                return Ok(Some(Violation {
                    time: t as u64,
                    pair: (u, v),
                    observed,
                    bound,
                }));
            }
        }
    }
    Ok(None)
}

fn check_twin_lock(g: &Graph, traj: &[ChipConfiguration]) -> Result<Option<Violation>> {
    let twins = g.twins();
    if twins.is_empty() {
        return Err(Error::BoundInapplicable(BoundId::TwinLock.name()));
    }
    for &(u, v, _) in &twins {
        for (t, pair) in traj.windows(2).enumerate() {
            if pair[0][u] == pair[0][v] && pair[1][u] != pair[1][v] {
                return Ok(Some(Violation {
                    time: t as u64 + 1,
                    pair: (u, v),
                    observed: (pair[1][u] - pair[1][v]).abs(),
                    bound: 0,
                }));
            }
        }
    }
    Ok(None)
}

fn check_wheel_rim(g: &Graph, traj: &[ChipConfiguration]) -> Result<Option<Violation>> {
    let (_, rim) = wheel_structure(g).ok_or(Error::BoundInapplicable(BoundId::WheelRim.name()))?;
    let rim_edges: Vec<(usize, usize)> = (0..rim.len())
        .map(|i| (rim[i], rim[(i + 1) % rim.len()]))
        .collect();
    for (t, pair) in traj.windows(2).enumerate() {
        for &(u, v) in &rim_edges {
            let prev = (pair[0][u] - pair[0][v]).abs();
            let next = (pair[1][u] - pair[1][v]).abs();
            let bound = if prev < 3 { 6 } else { prev };
            if next > bound {
                return Ok(Some(Violation {
                    time: t as u64 + 1,
                    pair: (u, v),
                    observed: next,
                    bound,
                }));
            }
        }
    }
    Ok(None)
}

fn check_wheel_hub(g: &Graph, traj: &[ChipConfiguration]) -> Result<Option<Violation>> {
    let (hub, rim) = wheel_structure(g).ok_or(Error::BoundInapplicable(BoundId::WheelHub.name()))?;
    let c0 = &traj[0];
    let rim_sum: i64 = (0..rim.len())
        .map(|i| {
            let (u, v) = (rim[i], rim[(i + 1) % rim.len()]);
            (c0[u] - c0[v]).abs().max(6)
        })
        .sum();
    let init_hub_max = rim.iter().map(|&v| (c0[hub] - c0[v]).abs()).max().unwrap();
    let cap = (g.vertex_count() as i64 + 2 + rim_sum).max(init_hub_max);
    for (t, c) in traj.iter().enumerate() {
        for &v in &rim {
            let observed = (c[hub] - c[v]).abs();
            if observed > cap {
                return Ok(Some(Violation {
                    time: t as u64,
                    pair: (hub, v),
                    observed,
                    bound: cap,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::trajectory;
    use crate::graph::Graph;

    #[test]
    fn full_degree_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(full_degree_config(&p4).values(), &[1, 2, 2, 1]);

        let g = Graph::clique_with_pendants(4, 4).unwrap();
        let c = full_degree_config(&g);
        assert_eq!(c.total(), 44);
        assert_eq!(c.total(), 2 * g.edge_count() as i128);

        let k3 = Graph::complete(3).unwrap();
        let c = full_degree_config(&k3);
        assert_eq!(c.values(), &[2, 2, 2]);
        assert!(crate::periodicity::is_fixed(&k3, &c).unwrap());
    }

    #[test]
    fn millpond_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(millpond_config(&c4, 0).unwrap().values(), &[1, 0, 0, 0]);

        let s3 = Graph::star(3).unwrap();
        let mp = millpond_config(&s3, 0).unwrap();
        assert_eq!(mp.values(), &[1, 0, 0]);
        assert_eq!(mp.total(), 1);

        assert!(millpond_config(&c4, 9).is_err());
    }

    #[test]
    fn qf_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(qf_config(&p3, 1).unwrap().values(), &[1, -2, 1]);

        let k4 = Graph::complete(4).unwrap();
        let qf = qf_config(&k4, 2).unwrap();
        assert_eq!(qf.total(), 0);
        // With N[v] = V(G) one firing restores the zero configuration.
        assert_eq!(fire(&k4, &qf).unwrap(), ChipConfiguration::zero(4));
    }

    #[test]
    fn millpond_predict_path_end_t1() {
        let g = Graph::path(12).unwrap();
        let d = g.layer_decomposition(0).unwrap();
        let c = millpond_predict(&d, &g, 1).unwrap();
        assert_eq!(c[0], 1 - g.degree(0) as i64);
        assert_eq!(c[1], 1);
        assert!(c.values()[2..].iter().all(|&x| x == 0));
    }

    #[test]
    fn millpond_predict_t0_is_millpond() {
        for (g, v) in [
            (Graph::grid(3, 4).unwrap(), 5),
            (Graph::complete_bipartite(2, 3).unwrap(), 1),
            (Graph::path(6).unwrap(), 2),
        ] {
            let d = g.layer_decomposition(v).unwrap();
            assert_eq!(
                millpond_predict(&d, &g, 0).unwrap(),
                millpond_config(&g, v).unwrap()
            );
        }
    }

    #[test]
    fn millpond_predict_cycle6_t3() {
        let g = Graph::cycle(6).unwrap();
        let d = g.layer_decomposition(0).unwrap();
        let predicted = millpond_predict(&d, &g, 3).unwrap();
        assert_eq!(predicted.values(), &[-1, 1, -1, 2, -1, 1]);
        let traj = trajectory(&g, &millpond_config(&g, 0).unwrap(), 3).unwrap();
        assert_eq!(predicted, traj[3]);
    }

    #[test]
    fn millpond_predict_rejects_odd_cycle() {
        let g = Graph::cycle(5).unwrap();
        let d = g.layer_decomposition(0).unwrap();
        assert_eq!(millpond_predict(&d, &g, 2).unwrap_err(), Error::NotBipartite);
    }

    #[test]
    fn path_predict_table_rows() {
        assert_eq!(
            path_full_degree_predict(7, 2).unwrap().values(),
            &[1, 3, 1, 2, 1, 3, 1]
        );
        assert_eq!(
            path_full_degree_predict(4, 0).unwrap().values(),
            &[1, 2, 2, 1]
        );
        assert_eq!(
            path_full_degree_predict(6, 1).unwrap().values(),
            &[2, 1, 2, 2, 1, 2]
        );
        assert!(path_full_degree_predict(2, 0).is_err());
    }

    #[test]
    fn path_predict_alternates_after_meet() {
        let meet = path_meet_time(9).unwrap();
        let at_meet = path_full_degree_predict(9, meet).unwrap();
        assert_eq!(path_full_degree_predict(9, meet + 2).unwrap(), at_meet);
        assert_ne!(path_full_degree_predict(9, meet + 1).unwrap(), at_meet);
        assert_eq!(
            path_full_degree_predict(9, meet + 3).unwrap(),
            path_full_degree_predict(9, meet + 1).unwrap()
        );
    }

    #[test]
    fn star_bound_examples() {
        let s5 = Graph::star(5).unwrap();
        assert_eq!(
            star_preperiod_bound(&s5, &ChipConfiguration::constant(5, 4)).unwrap(),
            0
        );
        assert_eq!(
            star_preperiod_bound(&s5, &millpond_config(&s5, 0).unwrap()).unwrap(),
            1
        );

        let s4 = Graph::star(4).unwrap();
        assert_eq!(
            star_preperiod_bound(&s4, &ChipConfiguration::new(vec![0, 9, 1, 5])).unwrap(),
            17
        );

        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            star_preperiod_bound(&p4, &ChipConfiguration::zero(4)).unwrap_err(),
            Error::NotAStar
        );
    }

    #[test]
    fn two_value_examples() {
        assert_eq!(complete_two_value_predict(2, 1, 0, 2, 1).unwrap(), (1, 1));
        assert_eq!(complete_two_value_predict(2, 1, 0, 2, 5).unwrap(), (1, 1));
        assert_eq!(complete_two_value_predict(4, 2, 0, 10, 1).unwrap(), (2, 8));
        assert_eq!(complete_two_value_predict(3, 1, 0, 0, 5).unwrap(), (0, 0));
        assert!(complete_two_value_predict(3, 0, 0, 0, 1).is_err());
        assert!(complete_two_value_predict(3, 4, 0, 0, 1).is_err());
    }

    #[test]
    fn two_value_alternation_matches_simulation() {
        let (n, d, alpha, beta) = (5usize, 2usize, -3i64, 11i64);
        let g = Graph::complete(n).unwrap();
        let mut values = vec![alpha; d];
        values.extend(vec![beta; n - d]);
        let traj = trajectory(&g, &ChipConfiguration::new(values), 12).unwrap();
        for (t, c) in traj.iter().enumerate() {
            let (a, b) = complete_two_value_predict(n, d, alpha, beta, t as u64).unwrap();
            assert!(c.values()[..d].iter().all(|&x| x == a), "t={t}");
            assert!(c.values()[d..].iter().all(|&x| x == b), "t={t}");
        }
    }

    #[test]
    fn deg2_bound_holds_on_cycle() {
        let g = Graph::cycle(8).unwrap();
        let c0 = ChipConfiguration::new(vec![14, 3, 9, 0, 20, 7, 1, 11]);
        let traj = trajectory(&g, &c0, 50).unwrap();
        let report = check_bound(BoundId::Deg2Edge, &g, &traj).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn twin_lock_holds_on_k5() {
        let g = Graph::complete(5).unwrap();
        let traj = trajectory(&g, &ChipConfiguration::new(vec![3, 3, 0, 1, 4]), 40).unwrap();
        let report = check_bound(BoundId::TwinLock, &g, &traj).unwrap();
        assert!(report.holds());
        for c in &traj {
            assert_eq!(c[0], c[1]);
        }
    }

    #[test]
    fn wheel_bounds_hold_on_w6_full_degree() {
        let g = Graph::wheel(6).unwrap();
        let traj = trajectory(&g, &full_degree_config(&g), 50).unwrap();
        assert!(check_bound(BoundId::WheelRim, &g, &traj).unwrap().holds());
        assert!(check_bound(BoundId::WheelHub, &g, &traj).unwrap().holds());
    }

    #[test]
    fn inapplicable_bounds_error() {
        let w6 = Graph::wheel(6).unwrap();
        let traj = trajectory(&w6, &ChipConfiguration::zero(6), 1).unwrap();
        assert!(matches!(
            check_bound(BoundId::Deg2Edge, &w6, &traj),
            Err(Error::BoundInapplicable("deg2_edge"))
        ));

        let p4 = Graph::path(4).unwrap();
        let traj = trajectory(&p4, &ChipConfiguration::zero(4), 1).unwrap();
        assert!(matches!(
            check_bound(BoundId::TwinPair, &p4, &traj),
            Err(Error::BoundInapplicable("twin_pair"))
        ));
        assert!(matches!(
            check_bound(BoundId::WheelRim, &p4, &traj),
            Err(Error::BoundInapplicable("wheel_rim"))
        ));
    }

    #[test]
    fn twin_pair_cap_holds_on_bipartite() {
        let g = Graph::complete_bipartite(3, 4).unwrap();
        let c0 = ChipConfiguration::new(vec![5, -2, 8, 0, 3, -7, 12]);
        let traj = trajectory(&g, &c0, 60).unwrap();
        assert!(check_bound(BoundId::TwinPair, &g, &traj).unwrap().holds());
    }

    #[test]
    fn violation_reporting_shape() {
        // A fabricated non-dynamics trajectory exercises the violation path.
        let g = Graph::path(3).unwrap();
        let traj = vec![
            ChipConfiguration::new(vec![0, 0, 0]),
            ChipConfiguration::new(vec![100, 0, 0]),
        ];
        let report = check_bound(BoundId::Deg2Edge, &g, &traj).unwrap();
        let v = report.first_violation.unwrap();
        assert_eq!(v.time, 1);
        assert_eq!(v.pair, (0, 1));
        assert_eq!(v.observed, 100);
        assert_eq!(v.bound, 3);
        assert!(!report.holds());
    }

    #[test]
    fn bound_id_round_trip() {
        for id in [
            BoundId::Deg2Edge,
            BoundId::TwinPair,
            BoundId::TwinLock,
            BoundId::WheelRim,
            BoundId::WheelHub,
        ] {
            assert_eq!(id.name().parse::<BoundId>().unwrap(), id);
        }
        assert!("nope".parse::<BoundId>().is_err());
    }
}
