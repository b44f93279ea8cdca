//! Kernel outputs checked against independent oracles: Floyd-Warshall for
//! BFS levels, Bellman-Ford for SSSP distances.

mod common;

use common::{bellman_ford, floyd_unweighted, race_probe_graph, with_unit_weights};
use graphbench::bfs::{bfs_parallel, bfs_sequential, UNREACHED};
use graphbench::kronecker::{generate, GenParams};
use graphbench::sssp::{sssp_dijkstra, sssp_dijkstra_linear};
use graphbench::{Graph, Repr};

#[test]
fn bfs_levels_match_floyd_oracle() {
    // Kronecker graphs at N = 256, both representations.
    for seed in 0..4 {
        let edges = generate(&GenParams::new(8, 8, seed).unwrap()).unwrap();
        let oracle = floyd_unweighted(&edges);
        for repr in [Repr::Csr, Repr::AdjMap] {
            let g = Graph::build(&edges, repr, 1).unwrap();
            for root in [0, 17, 255] {
                let r = bfs_sequential(&g, root).unwrap();
                assert_eq!(r.level, oracle[root], "seed {seed} root {root}");
            }
        }
    }
}

#[test]
fn parallel_bfs_levels_match_floyd_oracle() {
    let edges = generate(&GenParams::new(8, 16, 21).unwrap()).unwrap();
    let oracle = floyd_unweighted(&edges);
    let g = Graph::build(&edges, Repr::Csr, 4).unwrap();
    for workers in [2, 4, 8] {
        let r = bfs_parallel(&g, 5, workers).unwrap();
        assert_eq!(r.level, oracle[5], "workers {workers}");
    }
}

#[test]
fn dijkstra_matches_bellman_ford() {
    for seed in 0..6 {
        let edges = generate(&GenParams::new(9, 8, seed).unwrap()).unwrap();
        let oracle = bellman_ford(&edges, 3);
        let g = Graph::build(&edges, Repr::AdjMap, 1).unwrap();
        let r = sssp_dijkstra(&g, 3).unwrap();
        for v in 0..edges.num_vertices {
            if oracle[v].is_infinite() {
                assert!(r.dist[v].is_infinite(), "seed {seed} vertex {v}");
            } else {
                assert!(
                    (r.dist[v] - oracle[v]).abs() <= 1e-9,
                    "seed {seed} vertex {v}: {} vs oracle {}",
                    r.dist[v],
                    oracle[v]
                );
            }
        }
    }
}

#[test]
fn triangle_example_frozen_from_oracle() {
    // Bellman-Ford on the triangle gives dist [0, 1, 2] with the two-hop
    // path beating the direct weight-3 edge.
    let edges = graphbench::EdgeList::new(
        3,
        vec![0, 1, 0],
        vec![1, 2, 2],
        vec![1.0, 1.0, 3.0],
    )
    .unwrap();
    let oracle = bellman_ford(&edges, 0);
    assert_eq!(oracle, vec![0.0, 1.0, 2.0]);
    let g = Graph::build(&edges, Repr::Csr, 1).unwrap();
    let r = sssp_dijkstra(&g, 0).unwrap();
    assert_eq!(r.dist, oracle);
    assert_eq!(r.prev, vec![-1, 0, 1]);
}

#[test]
fn heap_and_linear_dijkstra_agree() {
    for seed in [2, 12, 22] {
        let edges = generate(&GenParams::new(8, 8, seed).unwrap()).unwrap();
        let g = Graph::build(&edges, Repr::Csr, 1).unwrap();
        let source = (seed as usize * 7) % g.num_vertices();
        let heap = sssp_dijkstra(&g, source).unwrap();
        let linear = sssp_dijkstra_linear(&g, source).unwrap();
        assert_eq!(heap.dist, linear.dist);
        assert_eq!(heap.prev, linear.prev);
    }
}

#[test]
fn unit_weight_dist_equals_bfs_level() {
    for seed in 0..3 {
        let edges = with_unit_weights(&generate(&GenParams::new(8, 8, seed).unwrap()).unwrap());
        let g = Graph::build(&edges, Repr::Csr, 1).unwrap();
        let bfs = bfs_sequential(&g, 1).unwrap();
        let sssp = sssp_dijkstra(&g, 1).unwrap();
        for v in 0..edges.num_vertices {
            if bfs.level[v] == UNREACHED {
                assert!(sssp.dist[v].is_infinite());
            } else {
                assert_eq!(sssp.dist[v], bfs.level[v] as f64);
            }
        }
    }
}

#[test]
fn race_probe_graph_is_depth_three() {
    let (edges, probe) = race_probe_graph(50);
    let oracle = floyd_unweighted(&edges);
    assert_eq!(oracle[0][probe], 3);
    let g = Graph::build(&edges, Repr::Csr, 1).unwrap();
    let seq = bfs_sequential(&g, 0).unwrap();
    assert_eq!(seq.level[probe], 3);
    for _ in 0..50 {
        let par = bfs_parallel(&g, 0, 8).unwrap();
        assert_eq!(par.level[probe], 3);
    }
}
