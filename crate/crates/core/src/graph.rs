//! Undirected simple graphs: construction, named-family generators, and
//! structural metrics (BFS layers, eccentricity, radius, diameter,
//! bipartiteness, twins).
//!
//! Vertices are dense 0-indexed integers; adjacency lists are kept sorted so
//! that graphs compare and hash canonically.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
///
/// Immutable after construction, so it can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Named graph families analysed by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Wheel,
    Complete,
    CompleteBipartite,
    Star,
    Grid,
    CliqueWithPendants,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops, and duplicate edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidSize("vertex count must be at least 1".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Dispatches to the family generators; `params` carries one or two sizes.
    pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
        let one = |p: &[usize]| -> Result<usize> {
            match p {
                [n] => Ok(*n),
                _ => Err(Error::InvalidParams(format!(
                    "expected one size parameter, got {}",
                    p.len()
                ))),
            }
        };
        let two = |p: &[usize]| -> Result<(usize, usize)> {
            match p {
                [a, b] => Ok((*a, *b)),
                _ => Err(Error::InvalidParams(format!(
                    "expected two size parameters, got {}",
                    p.len()
                ))),
            }
        };
        match family {
            Family::Path => Graph::path(one(params)?),
            Family::Cycle => Graph::cycle(one(params)?),
            Family::Wheel => Graph::wheel(one(params)?),
            Family::Complete => Graph::complete(one(params)?),
            Family::Star => Graph::star(one(params)?),
            Family::CompleteBipartite => {
                let (m, n) = two(params)?;
                Graph::complete_bipartite(m, n)
            }
            Family::Grid => {
                let (r, c) = two(params)?;
                Graph::grid(r, c)
            }
            Family::CliqueWithPendants => {
                let (k, l) = two(params)?;
                Graph::clique_with_pendants(k, l)
            }
        }
    }

    /// Path `P_n` on vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidSize("path needs at least 1 vertex".into()));
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidSize(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Wheel `W_n`, `n >= 4`: hub at index 0, rim `1..n` in cycle order.
    pub fn wheel(n: usize) -> Result<Graph> {
        if n < 4 {
            return Err(Error::InvalidSize(format!("wheel needs n >= 4, got {n}")));
        }
        let rim = n - 1;
        let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        for i in 0..rim {
            edges.push((1 + i, 1 + (i + 1) % rim));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidSize("complete graph needs n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Complete bipartite `K_{m,n}`: side A is `0..m`, side B is `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidSize(format!(
                "complete bipartite needs both sides >= 1, got {m}x{n}"
            )));
        }
        let mut edges = Vec::new();
        for u in 0..m {
            for v in 0..n {
                edges.push((u, m + v));
            }
        }
        Graph::from_edge_list(m + n, &edges)
    }

    /// Star `S_n = K_{1,n-1}` with the centre at index 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidSize("star needs at least 1 vertex".into()));
        }
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// `rows x cols` Cartesian grid in row-major order.
    pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
        if rows < 1 || cols < 1 {
            return Err(Error::InvalidSize(format!(
                "grid needs both dimensions >= 1, got {rows}x{cols}"
            )));
        }
        let idx = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        Graph::from_edge_list(rows * cols, &edges)
    }

    /// `K_k` with `l` pendant vertices attached to each clique vertex.
    ///
    /// Clique vertices are `0..k`; pendant `j` of clique vertex `i` sits at
    /// `k + i*l + j`.
    pub fn clique_with_pendants(k: usize, l: usize) -> Result<Graph> {
        if k < 1 {
            return Err(Error::InvalidSize("clique size must be >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        for i in 0..k {
            for j in 0..l {
                edges.push((i, k + i * l + j));
            }
        }
        Graph::from_edge_list(k + k * l, &edges)
    }

    /// Parses a generator spec string such as `path:7`, `grid:10x20`,
    /// `wheel:6`, `kpend:4x4`, `cycle:9`, `complete:5`, `star:8`, or
    /// `bipartite:3x4`.
    pub fn from_spec(spec: &str) -> Result<Graph> {
        let (name, params) = spec
            .split_once(':')
            .ok_or_else(|| Error::InvalidParams(format!("graph spec `{spec}` has no `:`")))?;
        let sizes: Vec<usize> = params
            .split('x')
            .map(|s| {
                s.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidParams(format!("bad size `{s}` in graph spec `{spec}`"))
                })
            })
            .collect::<Result<_>>()?;
        let family = match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "wheel" => Family::Wheel,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "bipartite" => Family::CompleteBipartite,
            "grid" => Family::Grid,
            "kpend" => Family::CliqueWithPendants,
            other => {
                return Err(Error::InvalidParams(format!(
                    "unknown graph family `{other}`"
                )))
            }
        };
        Graph::generate(family, &sizes)
    }

    /// Reads the edge-list text format: first line `n m`, then `m` lines `u v`.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut tokens = text.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let token = tokens.next().ok_or_else(|| {
                Error::InvalidParams(format!("edge list truncated: missing {what}"))
            })?;
            token
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad integer `{token}` in edge list")))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            edges.push((u, v));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Writes the edge-list text format accepted by [`Graph::from_edge_list_text`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Iterates every edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                n: self.adj.len(),
            })
        }
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.adj.len()];
        let mut components = 0;
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        components
    }

    /// Whether the graph admits a proper 2-colouring (checked per component).
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.adj.len()];
        for start in self.vertices() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let cx = colour[x].unwrap();
                for &y in &self.adj[x] {
                    match colour[y] {
                        None => {
                            colour[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// BFS layers `N_0(v), N_1(v), ...` from `v`, with per-vertex counts of
    /// neighbours one layer closer (`deg_up`) and one layer farther
    /// (`deg_down`), plus the eccentricity of `v`.
    ///
    /// Fails with [`Error::Disconnected`] if any vertex is unreachable.
    pub fn layer_decomposition(&self, v: usize) -> Result<LayerDecomposition> {
        self.check_vertex(v)?;
        let dist = self.bfs_distances(v);
        if let Some(unreachable) = dist.iter().position(|d| d.is_none()) {
            return Err(Error::Disconnected {
                start: v,
                unreachable,
            });
        }
        let dist: Vec<usize> = dist.into_iter().map(|d| d.unwrap()).collect();
        let ecc = *dist.iter().max().unwrap();
        let mut layers = vec![Vec::new(); ecc + 1];
        for x in self.vertices() {
            layers[dist[x]].push(x);
        }
        let mut deg_up = vec![0; self.adj.len()];
        let mut deg_down = vec![0; self.adj.len()];
        for x in self.vertices() {
            for &y in &self.adj[x] {
                if dist[y] + 1 == dist[x] {
                    deg_up[x] += 1;
                } else if dist[y] == dist[x] + 1 {
                    deg_down[x] += 1;
                }
            }
        }
        Ok(LayerDecomposition {
            source: v,
            layers,
            dist,
            deg_up,
            deg_down,
        })
    }

    /// Radius, diameter, bipartiteness, and component count.
    ///
    /// Radius and diameter are `None` for disconnected graphs.
    pub fn metrics(&self) -> GraphMetrics {
        let components = self.component_count();
        let (radius, diameter) = if components == 1 {
            let mut radius = usize::MAX;
            let mut diameter = 0;
            for v in self.vertices() {
                let ecc = self
                    .eccentricity_of(v)
                    .expect("connected graph has finite eccentricity");
                radius = radius.min(ecc);
                diameter = diameter.max(ecc);
            }
            (Some(radius), Some(diameter))
        } else {
            (None, None)
        };
        GraphMetrics {
            radius,
            diameter,
            is_bipartite: self.is_bipartite(),
            components,
        }
    }

    fn eccentricity_of(&self, v: usize) -> Option<usize> {
        let dist = self.bfs_distances(v);
        dist.into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// All unordered twin pairs: open (`N(u) = N(v)`) or closed (`N[u] = N[v]`).
    pub fn twins(&self) -> Vec<(usize, usize, TwinKind)> {
        let n = self.adj.len();
        let closed: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut list = self.adj[v].clone();
                list.push(v);
                list.sort_unstable();
                list
            })
            .collect();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u] == self.adj[v] {
                    pairs.push((u, v, TwinKind::Open));
                } else if closed[u] == closed[v] {
                    pairs.push((u, v, TwinKind::Closed));
                }
            }
        }
        pairs
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_edge_list_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    Open,
    Closed,
}

/// Result of [`Graph::metrics`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphMetrics {
    pub radius: Option<usize>,
    pub diameter: Option<usize>,
    pub is_bipartite: bool,
    pub components: usize,
}

/// BFS layer structure rooted at a source vertex of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    source: usize,
    layers: Vec<Vec<usize>>,
    dist: Vec<usize>,
    deg_up: Vec<usize>,
    deg_down: Vec<usize>,
}

impl LayerDecomposition {
    pub fn source(&self) -> usize {
        self.source
    }

    /// `layers()[i]` is `N_i(v)`, the vertices at distance `i` from the source.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn distance(&self, x: usize) -> usize {
        self.dist[x]
    }

    /// Number of neighbours of `x` one layer closer to the source.
    pub fn deg_up(&self, x: usize) -> usize {
        self.deg_up[x]
    }

    /// Number of neighbours of `x` one layer farther from the source.
    pub fn deg_down(&self, x: usize) -> usize {
        self.deg_down[x]
    }

    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Six-vertex graph reconstructed from the worked firing example.
    pub fn worked_example_graph() -> Graph {
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
    fn from_edge_list_builds_p3() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let degs: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn worked_example_graph_has_expected_degrees() {
        let g = worked_example_graph();
        let degs: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![3, 5, 4, 3, 4, 1]);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = Graph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge(0, 1));
        let err = Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge(0, 1));
    }

    #[test]
    fn self_loop_and_range_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, n: 2 }
        );
    }

    #[test]
    fn wheel_4_is_complete_4() {
        let w = Graph::wheel(4).unwrap();
        let k = Graph::complete(4).unwrap();
        assert_eq!(w, k);
    }

    #[test]
    fn star_5_degrees() {
        let g = Graph::star(5).unwrap();
        assert_eq!(g.degree(0), 4);
        for v in 1..5 {
            assert_eq!(g.degree(v), 1);
        }
    }

    #[test]
    fn clique_with_pendants_4x4_shape() {
        let g = Graph::clique_with_pendants(4, 4).unwrap();
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.edge_count(), 22);
        let deg7 = g.vertices().filter(|&v| g.degree(v) == 7).count();
        let deg1 = g.vertices().filter(|&v| g.degree(v) == 1).count();
        assert_eq!(deg7, 4);
        assert_eq!(deg1, 16);
    }

    #[test]
    fn wheel_degree_sequence() {
        for n in 5..10 {
            let g = Graph::wheel(n).unwrap();
            assert_eq!(g.degree(0), n - 1);
            for v in 1..n {
                assert_eq!(g.degree(v), 3);
            }
        }
    }

    #[test]
    fn layer_decomposition_star_from_centre() {
        let g = Graph::star(5).unwrap();
        let d = g.layer_decomposition(0).unwrap();
        assert_eq!(d.eccentricity(), 1);
        assert_eq!(d.layers()[0], vec![0]);
        assert_eq!(d.layers()[1], vec![1, 2, 3, 4]);
        for leaf in 1..5 {
            assert_eq!(d.deg_up(leaf), 1);
        }
    }

    #[test]
    fn layer_decomposition_even_cycle() {
        let g = Graph::cycle(6).unwrap();
        let d = g.layer_decomposition(0).unwrap();
        assert_eq!(d.eccentricity(), 3);
        assert_eq!(d.layers()[0], vec![0]);
        assert_eq!(d.layers()[1], vec![1, 5]);
        assert_eq!(d.layers()[2], vec![2, 4]);
        assert_eq!(d.layers()[3], vec![3]);
        assert_eq!(d.deg_up(3), 2);
        assert_eq!(d.deg_down(3), 0);
    }

    #[test]
    fn layer_decomposition_path_end() {
        let g = Graph::path(4).unwrap();
        let d = g.layer_decomposition(0).unwrap();
        assert_eq!(d.eccentricity(), 3);
        assert!(d.layers().iter().all(|layer| layer.len() == 1));
        let downs: Vec<_> = (0..4).map(|v| d.deg_down(v)).collect();
        assert_eq!(downs, vec![1, 1, 1, 0]);
    }

    #[test]
    fn layer_decomposition_rejects_disconnected() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(
            g.layer_decomposition(0).unwrap_err(),
            Error::Disconnected {
                start: 0,
                unreachable: 2
            }
        );
    }

    #[test]
    fn metrics_examples() {
        let p7 = Graph::path(7).unwrap().metrics();
        assert_eq!(p7.radius, Some(3));
        assert_eq!(p7.diameter, Some(6));
        assert!(p7.is_bipartite);

        let w6 = Graph::wheel(6).unwrap().metrics();
        assert_eq!(w6.radius, Some(1));
        assert_eq!(w6.diameter, Some(2));
        assert!(!w6.is_bipartite);

        assert!(!Graph::cycle(5).unwrap().metrics().is_bipartite);

        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap().metrics();
        assert_eq!(split.components, 2);
        assert_eq!(split.radius, None);
        assert_eq!(split.diameter, None);
    }

    #[test]
    fn twins_examples() {
        let k3 = Graph::complete(3).unwrap();
        let pairs = k3.twins();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.iter().all(|&(_, _, kind)| kind == TwinKind::Closed));

        let s4 = Graph::star(4).unwrap();
        let pairs = s4.twins();
        assert_eq!(
            pairs,
            vec![
                (1, 2, TwinKind::Open),
                (1, 3, TwinKind::Open),
                (2, 3, TwinKind::Open)
            ]
        );

        assert!(Graph::path(4).unwrap().twins().is_empty());
    }

    #[test]
    fn twins_adjacency_discipline() {
        for g in [
            Graph::complete(5).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::star(6).unwrap(),
            Graph::clique_with_pendants(3, 2).unwrap(),
        ] {
            for (u, v, kind) in g.twins() {
                match kind {
                    TwinKind::Open => assert!(!g.has_edge(u, v)),
                    TwinKind::Closed => assert!(g.has_edge(u, v)),
                }
            }
        }
    }

    #[test]
    fn spec_strings_parse() {
        assert_eq!(Graph::from_spec("path:7").unwrap(), Graph::path(7).unwrap());
        assert_eq!(
            Graph::from_spec("grid:10x20").unwrap(),
            Graph::grid(10, 20).unwrap()
        );
        assert_eq!(Graph::from_spec("wheel:6").unwrap(), Graph::wheel(6).unwrap());
        assert_eq!(
            Graph::from_spec("kpend:4x4").unwrap(),
            Graph::clique_with_pendants(4, 4).unwrap()
        );
        assert_eq!(
            Graph::from_spec("bipartite:3x4").unwrap(),
            Graph::complete_bipartite(3, 4).unwrap()
        );
        assert!(Graph::from_spec("blob:3").is_err());
        assert!(Graph::from_spec("grid:3").is_err());
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = worked_example_graph();
        let text = g.to_edge_list_text();
        assert!(text.starts_with("6 10\n"));
        let back = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn grid_row_major_indexing() {
        let g = Graph::grid(2, 3).unwrap();
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 7);
    }
}
