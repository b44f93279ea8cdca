//! Kernel 1: graph construction.
//!
//! Builds an immutable undirected weighted graph from the edge list, in
//! either of two representations behind one traversal interface:
//!
//! - CSR: row-offset / column-index / weight arrays. Requires sorting the
//!   mirrored entries by (source, target, weight); the sort runs inside
//!   build and is part of Kernel 1's timed cost.
//! - Adjacency map: vertex id -> neighbor list.
//!
//! Mirroring happens at build time: every non-loop input edge is stored in
//! both directions, a self-loop once. Duplicate input edges produce
//! duplicate adjacency entries. Within each row entries are sorted
//! ascending by (neighbor, weight), which makes the result canonical and
//! independent of worker count.

use std::collections::HashMap;
use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kronecker::EdgeList;

/// Representation choice for Kernel 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repr {
    AdjMap,
    Csr,
}

impl std::str::FromStr for Repr {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csr" => Ok(Repr::Csr),
            "adjmap" => Ok(Repr::AdjMap),
            other => Err(format!("unknown representation '{other}' (csr|adjmap)")),
        }
    }
}

/// CSR arrays over the mirrored entries.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrGraph {
    pub row_offsets: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub edge_weights: Vec<f64>,
}

/// Adjacency-map backend. A vertex with no neighbors may be absent from the
/// map; `neighbors` treats absent and empty identically.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AdjMapGraph {
    map: HashMap<usize, Vec<(usize, f64)>>,
}

#[derive(Debug, Clone, PartialEq)]
enum Backend {
    Csr(CsrGraph),
    AdjMap(AdjMapGraph),
}

/// Immutable undirected weighted graph. No mutating operation is exposed
/// after build returns.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    num_vertices: usize,
    num_edges_input: usize,
    backend: Backend,
}

/// Iterator over `(neighbor, weight)` pairs in ascending neighbor order.
pub enum Neighbors<'a> {
    Csr {
        cols: &'a [usize],
        weights: &'a [f64],
        i: usize,
    },
    Adj(std::slice::Iter<'a, (usize, f64)>),
}

impl Iterator for Neighbors<'_> {
    type Item = (usize, f64);

    #[inline]
    fn next(&mut self) -> Option<(usize, f64)> {
        match self {
            Neighbors::Csr { cols, weights, i } => {
                let item = cols.get(*i).map(|&v| (v, weights[*i]));
                *i += 1;
                item
            }
            Neighbors::Adj(iter) => iter.next().copied(),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self {
            Neighbors::Csr { cols, i, .. } => {
                let rem = cols.len().saturating_sub(*i);
                (rem, Some(rem))
            }
            Neighbors::Adj(iter) => iter.size_hint(),
        }
    }
}

impl Graph {
    /// Build a graph from the edge list with up to `workers` parallel
    /// workers. The result is bitwise-identical for any worker count.
    pub fn build(edges: &EdgeList, repr: Repr, workers: usize) -> Result<Graph> {
        let workers = workers.max(1);
        for (u, v, _) in edges.iter() {
            if u >= edges.num_vertices || v >= edges.num_vertices {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) out of range for {} vertices",
                    edges.num_vertices
                )));
            }
        }
        let backend = match repr {
            Repr::Csr => Backend::Csr(build_csr(edges, workers)?),
            Repr::AdjMap => Backend::AdjMap(build_adj_map(edges, workers)),
        };
        Ok(Graph {
            num_vertices: edges.num_vertices,
            num_edges_input: edges.len(),
            backend,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Number of input edges, before mirroring.
    pub fn num_edges_input(&self) -> usize {
        self.num_edges_input
    }

    pub fn repr(&self) -> Repr {
        match self.backend {
            Backend::Csr(_) => Repr::Csr,
            Backend::AdjMap(_) => Repr::AdjMap,
        }
    }

    pub fn csr(&self) -> Option<&CsrGraph> {
        match &self.backend {
            Backend::Csr(csr) => Some(csr),
            Backend::AdjMap(_) => None,
        }
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.num_vertices {
            return Err(Error::Bounds {
                vertex: u as i64,
                num_vertices: self.num_vertices,
            });
        }
        Ok(())
    }

    /// Adjacency entries of `u` in ascending (neighbor, weight) order.
    /// O(1 + degree(u)) enumeration for CSR.
    pub fn neighbors(&self, u: usize) -> Result<Neighbors<'_>> {
        self.check_vertex(u)?;
        Ok(match &self.backend {
            Backend::Csr(csr) => {
                let lo = csr.row_offsets[u];
                let hi = csr.row_offsets[u + 1];
                Neighbors::Csr {
                    cols: &csr.col_indices[lo..hi],
                    weights: &csr.edge_weights[lo..hi],
                    i: 0,
                }
            }
            Backend::AdjMap(adj) => {
                static EMPTY: Vec<(usize, f64)> = Vec::new();
                Neighbors::Adj(adj.map.get(&u).unwrap_or(&EMPTY).iter())
            }
        })
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(match &self.backend {
            Backend::Csr(csr) => csr.row_offsets[u + 1] - csr.row_offsets[u],
            Backend::AdjMap(adj) => adj.map.get(&u).map_or(0, Vec::len),
        })
    }

    /// Total adjacency entries: 2 x non-loop input edges + loop input edges.
    pub fn num_adjacency_entries(&self) -> usize {
        match &self.backend {
            Backend::Csr(csr) => csr.col_indices.len(),
            Backend::AdjMap(adj) => adj.map.values().map(Vec::len).sum(),
        }
    }
}

/// Split `[0, m)` into `workers` contiguous disjoint ranges with sizes
/// differing by at most one; the remainder goes to the earliest ranges.
pub fn parallel_partition_bounds(m: usize, workers: usize) -> Vec<Range<usize>> {
    assert!(workers >= 1);
    let base = m / workers;
    let rem = m % workers;
    let mut bounds = Vec::with_capacity(workers);
    let mut start = 0;
    for i in 0..workers {
        let len = base + usize::from(i < rem);
        bounds.push(start..start + len);
        start += len;
    }
    bounds
}

/// Per-worker view of a slice of the sorted entry array: which rows end
/// where, as seen from that slice alone.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrFragment {
    pub entry_range: Range<usize>,
    /// (row, end index) claims, ascending by row.
    pub row_ends: Vec<(usize, usize)>,
}

impl CsrFragment {
    /// Scan one range of entries sorted by source and record where each row
    /// seen in the range ends.
    pub fn from_sorted_entries(sources: &[usize], entry_range: Range<usize>) -> CsrFragment {
        let mut row_ends: Vec<(usize, usize)> = Vec::new();
        for i in entry_range.clone() {
            let row = sources[i];
            match row_ends.last_mut() {
                Some((last_row, end)) if *last_row == row => *end = i + 1,
                _ => row_ends.push((row, i + 1)),
            }
        }
        CsrFragment {
            entry_range,
            row_ends,
        }
    }
}

/// Combine per-worker fragments into a full row-offset array. Two adjacent
/// fragments may both claim the end of the row straddling their boundary;
/// the maximum claim wins. Rows nobody claims repeat the previous offset.
pub fn merge_boundary_rows(
    fragments: &[CsrFragment],
    num_vertices: usize,
    total_entries: usize,
) -> Result<Vec<usize>> {
    let mut row_end: Vec<Option<usize>> = vec![None; num_vertices];
    let mut last_claimant: Vec<Option<usize>> = vec![None; num_vertices];
    for (frag_idx, frag) in fragments.iter().enumerate() {
        for &(row, end) in &frag.row_ends {
            if row >= num_vertices {
                return Err(Error::Consistency(format!(
                    "fragment claims row {row} beyond {num_vertices} vertices"
                )));
            }
            if let Some(prev) = last_claimant[row] {
                if frag_idx != prev + 1 {
                    return Err(Error::Consistency(format!(
                        "row {row} claimed by non-adjacent fragments {prev} and {frag_idx}"
                    )));
                }
            }
            last_claimant[row] = Some(frag_idx);
            let merged = row_end[row].map_or(end, |e| e.max(end));
            row_end[row] = Some(merged);
        }
    }

    let mut offsets = Vec::with_capacity(num_vertices + 1);
    offsets.push(0);
    let mut prev = 0;
    for row in 0..num_vertices {
        if let Some(end) = row_end[row] {
            if end < prev {
                return Err(Error::Consistency(format!(
                    "row {row} ends at {end}, before previous row end {prev}"
                )));
            }
            prev = end;
        }
        offsets.push(prev);
    }
    if prev != total_entries {
        return Err(Error::Consistency(format!(
            "final offset {prev} does not cover {total_entries} entries"
        )));
    }
    Ok(offsets)
}

/// Mirrored (source, neighbor, weight) entries: both directions for a
/// non-loop edge, one entry for a loop.
fn mirrored_entries(edges: &EdgeList) -> Vec<(usize, usize, f64)> {
    let mut entries = Vec::with_capacity(2 * edges.len());
    for (u, v, w) in edges.iter() {
        entries.push((u, v, w));
        if u != v {
            entries.push((v, u, w));
        }
    }
    entries
}

fn entry_key(e: &(usize, usize, f64)) -> (usize, usize, u64) {
    // Weight bits as a total order; weights are non-negative so bit order
    // matches numeric order and duplicate-edge entries get a fixed position.
    (e.0, e.1, e.2.to_bits())
}

fn build_csr(edges: &EdgeList, workers: usize) -> Result<CsrGraph> {
    let mut entries = mirrored_entries(edges);
    sort_entries(&mut entries, workers);

    let sources: Vec<usize> = entries.iter().map(|e| e.0).collect();
    let bounds = parallel_partition_bounds(entries.len(), workers);
    let fragments = scan_fragments(&sources, &bounds, workers);
    let row_offsets = merge_boundary_rows(&fragments, edges.num_vertices, entries.len())?;

    Ok(CsrGraph {
        row_offsets,
        col_indices: entries.iter().map(|e| e.1).collect(),
        edge_weights: entries.iter().map(|e| e.2).collect(),
    })
}

#[cfg(feature = "parallel")]
fn sort_entries(entries: &mut [(usize, usize, f64)], workers: usize) {
    if workers > 1 {
        in_pool(workers, || entries.par_sort_unstable_by_key(entry_key));
    } else {
        entries.sort_unstable_by_key(entry_key);
    }
}

#[cfg(not(feature = "parallel"))]
fn sort_entries(entries: &mut [(usize, usize, f64)], _workers: usize) {
    entries.sort_unstable_by_key(entry_key);
}

#[cfg(feature = "parallel")]
fn scan_fragments(sources: &[usize], bounds: &[Range<usize>], workers: usize) -> Vec<CsrFragment> {
    if workers > 1 {
        in_pool(workers, || {
            bounds
                .par_iter()
                .map(|r| CsrFragment::from_sorted_entries(sources, r.clone()))
                .collect()
        })
    } else {
        bounds
            .iter()
            .map(|r| CsrFragment::from_sorted_entries(sources, r.clone()))
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn scan_fragments(sources: &[usize], bounds: &[Range<usize>], _workers: usize) -> Vec<CsrFragment> {
    bounds
        .iter()
        .map(|r| CsrFragment::from_sorted_entries(sources, r.clone()))
        .collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn in_pool<T: Send>(workers: usize, op: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(op)
}

fn build_adj_map(edges: &EdgeList, workers: usize) -> AdjMapGraph {
    // Workers accumulate private per-vertex buckets over disjoint edge
    // ranges; the merge walks partitions in index order so the pre-sort
    // entry order is deterministic. The shared-map thread-safety hazard
    // never arises.
    let bounds = parallel_partition_bounds(edges.len(), workers);
    let partials = accumulate_partials(edges, &bounds, workers);

    let mut map: HashMap<usize, Vec<(usize, f64)>> = HashMap::new();
    for partial in partials {
        for (vertex, mut bucket) in partial {
            map.entry(vertex).or_default().append(&mut bucket);
        }
    }
    for bucket in map.values_mut() {
        bucket.sort_unstable_by_key(|&(v, w)| (v, w.to_bits()));
    }
    AdjMapGraph { map }
}

fn accumulate_range(edges: &EdgeList, range: Range<usize>) -> Vec<(usize, Vec<(usize, f64)>)> {
    let mut local: HashMap<usize, Vec<(usize, f64)>> = HashMap::new();
    for i in range {
        let (u, v, w) = (edges.sources[i], edges.targets[i], edges.weights[i]);
        local.entry(u).or_default().push((v, w));
        if u != v {
            local.entry(v).or_default().push((u, w));
        }
    }
    let mut buckets: Vec<_> = local.into_iter().collect();
    buckets.sort_unstable_by_key(|&(v, _)| v);
    buckets
}

#[cfg(feature = "parallel")]
fn accumulate_partials(
    edges: &EdgeList,
    bounds: &[Range<usize>],
    workers: usize,
) -> Vec<Vec<(usize, Vec<(usize, f64)>)>> {
    if workers > 1 {
        in_pool(workers, || {
            bounds
                .par_iter()
                .map(|r| accumulate_range(edges, r.clone()))
                .collect()
        })
    } else {
        bounds
            .iter()
            .map(|r| accumulate_range(edges, r.clone()))
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn accumulate_partials(
    edges: &EdgeList,
    bounds: &[Range<usize>],
    _workers: usize,
) -> Vec<Vec<(usize, Vec<(usize, f64)>)>> {
    bounds
        .iter()
        .map(|r| accumulate_range(edges, r.clone()))
        .collect()
}
