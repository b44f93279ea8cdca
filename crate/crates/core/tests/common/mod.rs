//! Shared test oracles, deliberately independent of the implementation
//! paths they check: Bellman-Ford for distances, Floyd-Warshall for
//! unweighted levels, and a plain random edge-list builder.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use graphbench::EdgeList;

/// Bellman-Ford over the raw edge list (both directions, loops included).
pub fn bellman_ford(edges: &EdgeList, source: usize) -> Vec<f64> {
    let n = edges.num_vertices;
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    for _ in 0..n {
        let mut updated = false;
        for (u, v, w) in edges.iter() {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                updated = true;
            }
            if dist[v] + w < dist[u] {
                dist[u] = dist[v] + w;
                updated = true;
            }
        }
        if !updated {
            break;
        }
    }
    dist
}

/// All-pairs unweighted distances by Floyd-Warshall; row `source` is the
/// BFS level oracle. Quadratic memory, for N <= a few hundred.
pub fn floyd_unweighted(edges: &EdgeList) -> Vec<Vec<i64>> {
    let n = edges.num_vertices;
    const INF: i64 = i64::MAX / 4;
    let mut dist = vec![vec![INF; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v, _) in edges.iter() {
        if u != v {
            dist[u][v] = 1;
            dist[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist.iter_mut()
        .flatten()
        .for_each(|d| *d = if *d >= INF { -1 } else { *d });
    dist
}

/// Uniform random edge list with self-loops and duplicates possible.
pub fn random_edge_list(num_vertices: usize, num_edges: usize, seed: u64) -> EdgeList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sources = (0..num_edges)
        .map(|_| rng.random_range(0..num_vertices))
        .collect();
    let targets = (0..num_edges)
        .map(|_| rng.random_range(0..num_vertices))
        .collect();
    let weights = (0..num_edges).map(|_| rng.random::<f64>()).collect();
    EdgeList::new(num_vertices, sources, targets, weights).unwrap()
}

/// Replace every weight with 1.0.
pub fn with_unit_weights(edges: &EdgeList) -> EdgeList {
    EdgeList::new(
        edges.num_vertices,
        edges.sources.clone(),
        edges.targets.clone(),
        vec![1.0; edges.len()],
    )
    .unwrap()
}

/// A graph where vertex `probe` neighbors both a depth-2 and a depth-3
/// vertex, with wide depth-2 and depth-3 layers so the frontier actually
/// splits across workers. Correct level of `probe` is 3; a level-race
/// would label it 4. Returns (edge list, probe vertex).
pub fn race_probe_graph(layer_width: usize) -> (EdgeList, usize) {
    // Vertices: 0 root; 1..=w depth 1; w+1..=2w depth 2; 2w+1..=3w depth 3;
    // probe = 3w+1 adjacent to one depth-2 vertex and every depth-3 vertex.
    let w = layer_width;
    let probe = 3 * w + 1;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..=w {
        pairs.push((0, i));
        pairs.push((i, w + i));
        pairs.push((w + i, 2 * w + i));
    }
    pairs.push((w + 1, probe));
    for i in 1..=w {
        pairs.push((2 * w + i, probe));
    }
    let n = probe + 1;
    let m = pairs.len();
    let edges = EdgeList::new(
        n,
        pairs.iter().map(|p| p.0).collect(),
        pairs.iter().map(|p| p.1).collect(),
        vec![1.0; m],
    )
    .unwrap();
    (edges, probe)
}
