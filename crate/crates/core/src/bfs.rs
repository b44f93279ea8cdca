//! Kernel 2: breadth-first search.
//!
//! Two variants over the same graph interface: a sequential FIFO-queue BFS
//! and a level-synchronized parallel BFS. The parallel variant processes
//! one entire level per step; a barrier separates depth `l` from depth
//! `l + 1`, which is what keeps a vertex reachable from depths 2 and 3
//! from ever being labeled 4. Vertices are claimed with a compare-exchange
//! on their level entry, so exactly one worker wins each vertex and writes
//! its parent at claim time.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicI64, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel for unreached vertices in both level and parent arrays.
pub const UNREACHED: i64 = -1;

/// BFS levels and parents rooted at `root`. `level[v] == -1` iff `v` was
/// not reached; the root is its own parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsResult {
    pub root: usize,
    pub level: Vec<i64>,
    pub parent: Vec<i64>,
}

impl BfsResult {
    pub fn num_reached(&self) -> usize {
        self.level.iter().filter(|&&l| l != UNREACHED).count()
    }
}

/// The vertex set at one BFS depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    pub vertices: Vec<usize>,
    pub depth: i64,
}

fn check_root(g: &Graph, root: usize) -> Result<()> {
    if root >= g.num_vertices() {
        return Err(Error::Bounds {
            vertex: root as i64,
            num_vertices: g.num_vertices(),
        });
    }
    Ok(())
}

pub fn bfs_sequential(g: &Graph, root: usize) -> Result<BfsResult> {
    check_root(g, root)?;
    let n = g.num_vertices();
    let mut level = vec![UNREACHED; n];
    let mut parent = vec![UNREACHED; n];
    level[root] = 0;
    parent[root] = root as i64;

    let mut queue = VecDeque::new();
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let next_level = level[u] + 1;
        for (v, _) in g.neighbors(u)? {
            if level[v] == UNREACHED {
                level[v] = next_level;
                parent[v] = u as i64;
                queue.push_back(v);
            }
        }
    }
    Ok(BfsResult { root, level, parent })
}

/// Chunk size used to split a frontier across workers.
pub fn frontier_chunk_size(frontier_len: usize, workers: usize) -> usize {
    (frontier_len / (4 * workers)).max(64)
}

/// Expand one frontier: claim every unvisited neighbor at `depth + 1` via
/// compare-exchange on its level entry and return the deduplicated next
/// frontier. Safe to run from multiple workers over disjoint chunks.
pub fn expand_level(
    g: &Graph,
    frontier: &Frontier,
    level: &[AtomicI64],
    parent: &[AtomicI64],
) -> Frontier {
    let mut next = Vec::new();
    expand_chunk(g, &frontier.vertices, frontier.depth, level, parent, &mut next);
    Frontier {
        vertices: next,
        depth: frontier.depth + 1,
    }
}

fn expand_chunk(
    g: &Graph,
    chunk: &[usize],
    depth: i64,
    level: &[AtomicI64],
    parent: &[AtomicI64],
    next: &mut Vec<usize>,
) {
    for &u in chunk {
        debug_assert_eq!(level[u].load(Ordering::Relaxed), depth);
        for (v, _) in g.neighbors(u).expect("frontier vertex in range") {
            if level[v]
                .compare_exchange(UNREACHED, depth + 1, Ordering::Relaxed, Ordering::Relaxed)
                .is_ok()
            {
                parent[v].store(u as i64, Ordering::Relaxed);
                next.push(v);
            }
        }
    }
}

pub fn bfs_parallel(g: &Graph, root: usize, workers: usize) -> Result<BfsResult> {
    bfs_parallel_with_chunk(g, root, workers, None)
}

/// Parallel BFS with an explicit frontier chunk size (`None` = default
/// `max(64, |frontier| / (4 * workers))`).
pub fn bfs_parallel_with_chunk(
    g: &Graph,
    root: usize,
    workers: usize,
    chunk_size: Option<usize>,
) -> Result<BfsResult> {
    check_root(g, root)?;
    #[cfg(feature = "parallel")]
    let workers = workers.max(1);
    #[cfg(not(feature = "parallel"))]
    let _ = workers;
    let n = g.num_vertices();
    let level: Vec<AtomicI64> = (0..n).map(|_| AtomicI64::new(UNREACHED)).collect();
    let parent: Vec<AtomicI64> = (0..n).map(|_| AtomicI64::new(UNREACHED)).collect();
    level[root].store(0, Ordering::Relaxed);
    parent[root].store(root as i64, Ordering::Relaxed);

    let mut frontier = Frontier {
        vertices: vec![root],
        depth: 0,
    };

    #[cfg(feature = "parallel")]
    if workers > 1 {
        // One pool per invocation, reused across all levels. Each
        // par_chunks pass is one level; rayon joins before the next level
        // starts, which is the synchronization barrier.
        crate::graph::in_pool(workers, || {
            while !frontier.vertices.is_empty() {
                let chunk =
                    chunk_size.unwrap_or_else(|| frontier_chunk_size(frontier.vertices.len(), workers));
                let next: Vec<usize> = frontier
                    .vertices
                    .par_chunks(chunk)
                    .map(|chunk| {
                        let mut local = Vec::new();
                        expand_chunk(g, chunk, frontier.depth, &level, &parent, &mut local);
                        local
                    })
                    .reduce(Vec::new, |mut a, mut b| {
                        a.append(&mut b);
                        a
                    });
                frontier = Frontier {
                    vertices: next,
                    depth: frontier.depth + 1,
                };
            }
        });
        return Ok(finish(root, level, parent));
    }

    let _ = chunk_size;
    while !frontier.vertices.is_empty() {
        frontier = expand_level(g, &frontier, &level, &parent);
    }
    Ok(finish(root, level, parent))
}

fn finish(root: usize, level: Vec<AtomicI64>, parent: Vec<AtomicI64>) -> BfsResult {
    let level: Vec<i64> = level.into_iter().map(AtomicI64::into_inner).collect();
    let parent: Vec<i64> = parent.into_iter().map(AtomicI64::into_inner).collect();
    #[cfg(debug_assertions)]
    {
        // Idempotent-claim check: every reached vertex was written exactly
        // once, so reached parents are all valid and counts line up.
        let reached = level.iter().filter(|&&l| l != UNREACHED).count();
        let with_parent = parent.iter().filter(|&&p| p != UNREACHED).count();
        debug_assert_eq!(reached, with_parent);
    }
    BfsResult { root, level, parent }
}
