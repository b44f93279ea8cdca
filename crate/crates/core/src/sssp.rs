//! Kernel 3: single-source shortest paths (Dijkstra, non-negative
//! weights). Single-threaded by contract.
//!
//! Two interchangeable variants with identical output:
//! - the default binary-heap form with lazy deletion (popped entries whose
//!   key exceeds the settled distance are skipped), and
//! - the literal linear min-extraction form, kept for fidelity testing.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel for "no predecessor" (unreachable vertices and the source).
pub const NO_PREV: i64 = -1;

/// Distances and predecessors rooted at `source`. Unreachable vertices
/// carry `f64::INFINITY` and predecessor −1.
#[derive(Debug, Clone, PartialEq)]
pub struct SsspResult {
    pub source: usize,
    pub dist: Vec<f64>,
    pub prev: Vec<i64>,
}

/// Relax edge (u, v, w): adopt the path through `u` iff it is strictly
/// shorter, so ties keep the incumbent predecessor. Returns whether `v`
/// was updated.
#[inline]
pub fn relax(u: usize, v: usize, w: f64, dist: &mut [f64], prev: &mut [i64]) -> bool {
    let alt = dist[u] + w;
    if alt < dist[v] {
        dist[v] = alt;
        prev[v] = u as i64;
        true
    } else {
        false
    }
}

fn check_source(g: &Graph, source: usize) -> Result<()> {
    if source >= g.num_vertices() {
        return Err(Error::Bounds {
            vertex: source as i64,
            num_vertices: g.num_vertices(),
        });
    }
    Ok(())
}

fn check_weight(u: usize, v: usize, w: f64) -> Result<()> {
    if w < 0.0 {
        return Err(Error::Domain(format!(
            "negative weight {w} on edge ({u}, {v}); Dijkstra requires non-negative weights"
        )));
    }
    Ok(())
}

struct HeapEntry {
    dist: f64,
    vertex: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want the min entry on top.
        // Ties break toward the smaller vertex id for determinism.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Dijkstra with a binary heap and lazy deletion.
pub fn sssp_dijkstra(g: &Graph, source: usize) -> Result<SsspResult> {
    check_source(g, source)?;
    let n = g.num_vertices();
    let mut dist = vec![f64::INFINITY; n];
    let mut prev = vec![NO_PREV; n];
    dist[source] = 0.0;

    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: source,
    });
    while let Some(HeapEntry { dist: d, vertex: u }) = heap.pop() {
        if d > dist[u] {
            continue; // stale entry
        }
        for (v, w) in g.neighbors(u)? {
            check_weight(u, v, w)?;
            if relax(u, v, w, &mut dist, &mut prev) {
                heap.push(HeapEntry {
                    dist: dist[v],
                    vertex: v,
                });
            }
        }
    }
    Ok(SsspResult { source, dist, prev })
}

/// Literal linear min-extraction Dijkstra: O(V^2) scan for the unsettled
/// vertex of minimum distance, relaxing only still-queued neighbors.
pub fn sssp_dijkstra_linear(g: &Graph, source: usize) -> Result<SsspResult> {
    check_source(g, source)?;
    let n = g.num_vertices();
    let mut dist = vec![f64::INFINITY; n];
    let mut prev = vec![NO_PREV; n];
    let mut in_queue = vec![true; n];
    dist[source] = 0.0;

    for _ in 0..n {
        let u = match (0..n)
            .filter(|&u| in_queue[u] && dist[u].is_finite())
            .min_by(|&a, &b| dist[a].total_cmp(&dist[b]).then_with(|| a.cmp(&b)))
        {
            Some(u) => u,
            None => break, // everything left is unreachable
        };
        in_queue[u] = false;
        for (v, w) in g.neighbors(u)? {
            check_weight(u, v, w)?;
            if in_queue[v] {
                relax(u, v, w, &mut dist, &mut prev);
            }
        }
    }
    Ok(SsspResult { source, dist, prev })
}
