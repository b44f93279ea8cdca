//! Graph500-style validation of kernel outputs.
//!
//! Validation reads only the original edge list and the result arrays,
//! never Graph internals, so a representation bug in Kernel 1 cannot hide
//! from it. Edge-existence checks go through a transient sorted index of
//! the edge list; building that index is not part of any timed region.

use crate::bfs::{BfsResult, UNREACHED};
use crate::error::{Error, Result};
use crate::kronecker::EdgeList;
use crate::sssp::{SsspResult, NO_PREV};

pub const DIST_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str) -> Check {
        Check {
            name,
            passed: true,
            detail: "ok".into(),
        }
    }

    fn fail(name: &'static str, detail: String) -> Check {
        Check {
            name,
            passed: false,
            detail,
        }
    }

    fn from_failure(name: &'static str, failure: Option<String>) -> Check {
        match failure {
            None => Check::pass(name),
            Some(detail) => Check::fail(name, detail),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}: {}\n", c.name, c.detail));
        }
        out.push_str(if self.passed() {
            "validation passed\n"
        } else {
            "validation FAILED\n"
        });
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("check_name,pass,detail\n");
        for c in &self.checks {
            let detail = c.detail.replace(',', ";");
            out.push_str(&format!("{},{},{}\n", c.name, c.passed, detail));
        }
        out
    }
}

/// Sorted undirected edge index for existence and weight lookups.
struct EdgeIndex {
    entries: Vec<(usize, usize, f64)>,
}

impl EdgeIndex {
    fn new(edges: &EdgeList) -> EdgeIndex {
        let mut entries = Vec::with_capacity(2 * edges.len());
        for (u, v, w) in edges.iter() {
            entries.push((u, v, w));
            if u != v {
                entries.push((v, u, w));
            }
        }
        entries.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.total_cmp(&b.2)));
        EdgeIndex { entries }
    }

    fn weights_between(&self, u: usize, v: usize) -> impl Iterator<Item = f64> + '_ {
        let lo = self.entries.partition_point(|e| (e.0, e.1) < (u, v));
        self.entries[lo..]
            .iter()
            .take_while(move |e| (e.0, e.1) == (u, v))
            .map(|e| e.2)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weights_between(u, v).next().is_some()
    }
}

/// Reachable set from `root`, computed directly over the edge list
/// (independent of the Graph representation under test).
fn reachable_from(edges: &EdgeList, root: usize) -> Vec<bool> {
    let mut adj = vec![Vec::new(); edges.num_vertices];
    for (u, v, _) in edges.iter() {
        adj[u].push(v);
        if u != v {
            adj[v].push(u);
        }
    }
    let mut reached = vec![false; edges.num_vertices];
    reached[root] = true;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !reached[v] {
                reached[v] = true;
                stack.push(v);
            }
        }
    }
    reached
}

fn check_lengths(num_vertices: usize, len_a: usize, len_b: usize) -> Result<()> {
    if len_a != num_vertices || len_b != num_vertices {
        return Err(Error::Validation(format!(
            "result arrays sized {len_a}/{len_b}, expected {num_vertices}"
        )));
    }
    Ok(())
}

pub fn validate_bfs(edges: &EdgeList, result: &BfsResult) -> Result<ValidationReport> {
    check_lengths(edges.num_vertices, result.level.len(), result.parent.len())?;
    if result.root >= edges.num_vertices {
        return Err(Error::Bounds {
            vertex: result.root as i64,
            num_vertices: edges.num_vertices,
        });
    }
    let index = EdgeIndex::new(edges);
    let root = result.root;
    let level = &result.level;
    let parent = &result.parent;
    let mut checks = Vec::new();

    checks.push(Check::from_failure(
        "root_is_fixpoint",
        if level[root] == 0 && parent[root] == root as i64 {
            None
        } else {
            Some(format!(
                "root {root} has level {} and parent {}",
                level[root], parent[root]
            ))
        },
    ));

    let sentinel = (0..edges.num_vertices)
        .filter(|&v| v != root)
        .find(|&v| (level[v] == UNREACHED) != (parent[v] == UNREACHED))
        .map(|v| format!("vertex {v}: level {} but parent {}", level[v], parent[v]));
    checks.push(Check::from_failure("sentinel_consistency", sentinel));

    let tree_edge = (0..edges.num_vertices)
        .filter(|&v| v != root && level[v] != UNREACHED && parent[v] != UNREACHED)
        .find(|&v| {
            let p = parent[v];
            p < 0 || p as usize >= edges.num_vertices || !index.has_edge(v, p as usize)
        })
        .map(|v| format!("tree edge ({v}, {}) not in edge list", parent[v]));
    checks.push(Check::from_failure("tree_edges_exist", tree_edge));

    let level_step = (0..edges.num_vertices)
        .filter(|&v| {
            v != root
                && level[v] != UNREACHED
                && parent[v] >= 0
                && (parent[v] as usize) < edges.num_vertices
        })
        .find(|&v| level[v] != level[parent[v] as usize] + 1)
        .map(|v| {
            format!(
                "level[{v}] = {} but level[parent] = {}",
                level[v],
                level[parent[v] as usize]
            )
        });
    checks.push(Check::from_failure("level_step_is_one", level_step));

    let gap = edges
        .iter()
        .find(|&(u, v, _)| {
            level[u] != UNREACHED && level[v] != UNREACHED && (level[u] - level[v]).abs() > 1
        })
        .map(|(u, v, _)| {
            format!(
                "edge ({u}, {v}) spans levels {} and {}",
                level[u], level[v]
            )
        });
    checks.push(Check::from_failure("edge_level_gap_le_one", gap));

    let frontier_closed = edges
        .iter()
        .find(|&(u, v, _)| (level[u] == UNREACHED) != (level[v] == UNREACHED))
        .map(|(u, v, _)| format!("edge ({u}, {v}) crosses the reached boundary"));
    checks.push(Check::from_failure("reached_iff_connected", frontier_closed));

    Ok(ValidationReport { checks })
}

pub fn validate_sssp(edges: &EdgeList, result: &SsspResult) -> Result<ValidationReport> {
    check_lengths(edges.num_vertices, result.dist.len(), result.prev.len())?;
    if result.source >= edges.num_vertices {
        return Err(Error::Bounds {
            vertex: result.source as i64,
            num_vertices: edges.num_vertices,
        });
    }
    let index = EdgeIndex::new(edges);
    let source = result.source;
    let dist = &result.dist;
    let prev = &result.prev;
    let mut checks = Vec::new();

    checks.push(Check::from_failure(
        "source_dist_zero",
        if dist[source] == 0.0 {
            None
        } else {
            Some(format!("dist[{source}] = {}", dist[source]))
        },
    ));

    let tree = (0..edges.num_vertices)
        .filter(|&v| v != source && dist[v].is_finite())
        .find_map(|v| {
            let p = prev[v];
            if p < 0 || p as usize >= edges.num_vertices {
                return Some(format!("reached vertex {v} has predecessor {p}"));
            }
            let p = p as usize;
            let consistent = index
                .weights_between(v, p)
                .any(|w| (dist[v] - (dist[p] + w)).abs() <= DIST_TOLERANCE);
            if consistent {
                None
            } else {
                Some(format!(
                    "no edge weight explains dist[{v}] = {} from dist[{p}] = {}",
                    dist[v], dist[p]
                ))
            }
        });
    checks.push(Check::from_failure("tree_edge_consistency", tree));

    let triangle = edges
        .iter()
        .flat_map(|(u, v, w)| [(u, v, w), (v, u, w)])
        .find(|&(u, v, w)| dist[u].is_finite() && dist[v] > dist[u] + w + DIST_TOLERANCE)
        .map(|(u, v, w)| {
            format!(
                "edge ({u}, {v}, {w}) violated: dist[{v}] = {} > {} + {w}",
                dist[v], dist[u]
            )
        });
    checks.push(Check::from_failure("triangle_inequality", triangle));

    let reachable = reachable_from(edges, source);
    let reach = (0..edges.num_vertices)
        .find(|&v| dist[v].is_finite() != reachable[v])
        .map(|v| {
            format!(
                "vertex {v}: dist = {} but reachable = {}",
                dist[v], reachable[v]
            )
        });
    checks.push(Check::from_failure("reached_set_matches_bfs", reach));

    let sentinel = (0..edges.num_vertices)
        .find(|&v| (v == source || !dist[v].is_finite()) && prev[v] != NO_PREV)
        .map(|v| format!("vertex {v} should have predecessor -1, has {}", prev[v]));
    checks.push(Check::from_failure("sentinel_consistency", sentinel));

    Ok(ValidationReport { checks })
}
