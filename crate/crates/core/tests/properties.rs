//! Property tests over randomized edge lists.

use proptest::collection::vec;
use proptest::prelude::*;

use graphbench::bfs::{bfs_parallel, bfs_sequential};
use graphbench::edge_io::{read_edge_file, write_edge_file};
use graphbench::graph::parallel_partition_bounds;
use graphbench::kronecker::degree_histogram;
use graphbench::{EdgeList, Graph, Repr};

fn arb_edge_list() -> impl Strategy<Value = EdgeList> {
    (1usize..64, 0usize..200).prop_flat_map(|(n, m)| {
        (
            vec(0..n, m),
            vec(0..n, m),
            vec(0f64..1f64, m),
            Just(n),
        )
            .prop_map(|(sources, targets, weights, n)| {
                EdgeList::new(n, sources, targets, weights).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn edge_file_round_trip(edges in arb_edge_list()) {
        let f = tempfile::NamedTempFile::new().unwrap();
        write_edge_file(f.path(), &edges).unwrap();
        let back = read_edge_file(f.path()).unwrap();
        prop_assert_eq!(&back, &edges);
        let bits: Vec<u64> = back.weights.iter().map(|w| w.to_bits()).collect();
        let expect: Vec<u64> = edges.weights.iter().map(|w| w.to_bits()).collect();
        prop_assert_eq!(bits, expect);
    }

    #[test]
    fn graph_symmetry_and_conservation(edges in arb_edge_list(), repr_csr in any::<bool>()) {
        let repr = if repr_csr { Repr::Csr } else { Repr::AdjMap };
        let g = Graph::build(&edges, repr, 3).unwrap();
        let loops = edges.iter().filter(|&(u, v, _)| u == v).count();
        prop_assert_eq!(g.num_adjacency_entries(), 2 * (edges.len() - loops) + loops);
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for u in 0..g.num_vertices() {
            let mut prev = None;
            for (v, w) in g.neighbors(u).unwrap() {
                // Rows are sorted ascending by (neighbor, weight).
                prop_assert!(prev <= Some((v, w.to_bits())));
                prev = Some((v, w.to_bits()));
                forward.push((u, v, w.to_bits()));
                backward.push((v, u, w.to_bits()));
            }
        }
        forward.sort_unstable();
        backward.sort_unstable();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn build_workers_do_not_change_result(edges in arb_edge_list()) {
        for repr in [Repr::Csr, Repr::AdjMap] {
            let baseline = Graph::build(&edges, repr, 1).unwrap();
            for workers in [2, 5, 8] {
                prop_assert_eq!(&Graph::build(&edges, repr, workers).unwrap(), &baseline);
            }
        }
    }

    #[test]
    fn representations_are_equivalent(edges in arb_edge_list()) {
        let csr = Graph::build(&edges, Repr::Csr, 2).unwrap();
        let adj = Graph::build(&edges, Repr::AdjMap, 2).unwrap();
        for u in 0..edges.num_vertices {
            let a: Vec<_> = csr.neighbors(u).unwrap().collect();
            let b: Vec<_> = adj.neighbors(u).unwrap().collect();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn parallel_bfs_levels_equal_sequential(edges in arb_edge_list(), root_pick in any::<prop::sample::Index>(), workers in 1usize..9) {
        let root = root_pick.index(edges.num_vertices);
        let g = Graph::build(&edges, Repr::Csr, 1).unwrap();
        let seq = bfs_sequential(&g, root).unwrap();
        let par = bfs_parallel(&g, root, workers).unwrap();
        prop_assert_eq!(&par.level, &seq.level);
        // Any valid tree is accepted; check its shape, not its identity.
        for v in 0..g.num_vertices() {
            if par.parent[v] >= 0 && v != root {
                let p = par.parent[v] as usize;
                prop_assert_eq!(seq.level[v], seq.level[p] + 1);
                prop_assert!(g.neighbors(p).unwrap().any(|(x, _)| x == v));
            }
        }
    }

    #[test]
    fn partition_bounds_cover_exactly(m in 0usize..500, workers in 1usize..17) {
        let bounds = parallel_partition_bounds(m, workers);
        prop_assert_eq!(bounds.len(), workers);
        prop_assert_eq!(bounds[0].start, 0);
        prop_assert_eq!(bounds.last().unwrap().end, m);
        for pair in bounds.windows(2) {
            prop_assert_eq!(pair[0].end, pair[1].start);
        }
        let sizes: Vec<usize> = bounds.iter().map(|r| r.len()).collect();
        let min = sizes.iter().min().unwrap();
        let max = sizes.iter().max().unwrap();
        prop_assert!(max - min <= 1);
    }

    #[test]
    fn degree_histogram_mass(edges in arb_edge_list()) {
        let hist = degree_histogram(&edges);
        let mass: usize = hist.iter().map(|(d, c)| d * c).sum();
        prop_assert_eq!(mass, 2 * edges.len());
        let vertices: usize = hist.values().sum();
        prop_assert_eq!(vertices, edges.num_vertices);
    }
}
