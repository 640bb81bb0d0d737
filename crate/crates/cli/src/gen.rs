//! Random graph builders for the verification suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use diffusion_core::Graph;

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::from_edge_list(1, &[]).unwrap();
    }
    if n == 2 {
        return Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| degree[v] == 1)
        .collect();
    for &s in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Connected random graph: a random spanning tree plus every remaining pair
/// with probability `extra_edge_prob`.
pub fn random_connected_graph(n: usize, extra_edge_prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Rotates through connected bipartite families: random tree, grid, even
/// cycle, complete bipartite. Always at least 2 and at most `max_n` vertices.
pub fn random_bipartite(case: u64, max_n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let max_n = max_n.max(4);
    match case % 4 {
        0 => random_tree(rng.random_range(2..=max_n), rng),
        1 => {
            let rows = rng.random_range(1..=max_n / 2);
            let cols = rng.random_range(2..=(max_n / rows).max(2));
            Graph::grid(rows, cols).unwrap()
        }
        2 => {
            let half = rng.random_range(2..=max_n / 2);
            Graph::cycle(2 * half).unwrap()
        }
        _ => {
            let m = rng.random_range(1..=max_n - 1);
            let n = rng.random_range(1..=(max_n - m).max(1));
            Graph::complete_bipartite(m, n).unwrap()
        }
    }
}
