//! Kronecker (R-MAT) edge-list generation.
//!
//! The generator emits `2^scale * edgefactor` edge tuples by recursive
//! quadrant selection, then permutes vertex labels and shuffles edge order.
//! Generation is single-threaded by contract; it is untimed and the output
//! is persisted once and reused by the kernels.
//!
//! Reproducibility note: output is a deterministic function of the full
//! parameter set and the PRNG algorithm (ChaCha8, seeded from the 64-bit
//! seed with one fixed stream per phase). Golden files are tied to the
//! PRNG algorithm, not just the seed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Graph500 reference initiator probabilities (a, b, c, d).
pub const GRAPH500_INITIATOR: [f64; 4] = [0.57, 0.19, 0.19, 0.05];

/// Stream ids carving independent ChaCha8 substreams out of one seed, so
/// relabeling and shuffling can be varied without disturbing quadrant
/// selection.
const STREAM_QUADRANTS: u64 = 0;
const STREAM_WEIGHTS: u64 = 1;
const STREAM_PERMUTE: u64 = 2;
const STREAM_SHUFFLE: u64 = 3;

/// Parameters for one generator run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub scale: u32,
    pub edgefactor: u64,
    pub seed: u64,
    /// Quadrant probabilities (a, b, c, d); must sum to 1.
    pub initiator: [f64; 4],
}

impl GenParams {
    pub fn new(scale: u32, edgefactor: u64, seed: u64) -> Result<Self> {
        Self::with_initiator(scale, edgefactor, seed, GRAPH500_INITIATOR)
    }

    pub fn with_initiator(
        scale: u32,
        edgefactor: u64,
        seed: u64,
        initiator: [f64; 4],
    ) -> Result<Self> {
        let params = GenParams {
            scale,
            edgefactor,
            seed,
            initiator,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.scale < 1 {
            return Err(Error::InvalidParams("scale must be >= 1".into()));
        }
        if self.edgefactor < 1 {
            return Err(Error::InvalidParams("edgefactor must be >= 1".into()));
        }
        let sum: f64 = self.initiator.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParams(format!(
                "initiator probabilities sum to {sum}, expected 1"
            )));
        }
        if self.initiator.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(Error::InvalidParams(
                "initiator probabilities must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> Result<usize> {
        if self.scale as usize >= usize::BITS as usize - 1 {
            return Err(Error::Capacity {
                scale: self.scale,
                edgefactor: self.edgefactor,
            });
        }
        Ok(1usize << self.scale)
    }

    pub fn num_edges(&self) -> Result<usize> {
        let n = self.num_vertices()?;
        usize::try_from(self.edgefactor)
            .ok()
            .and_then(|ef| n.checked_mul(ef))
            .ok_or(Error::Capacity {
                scale: self.scale,
                edgefactor: self.edgefactor,
            })
    }
}

/// Flat edge tuples, the sole inter-kernel contract. Self-loops and
/// duplicate edges may be present; Kernel 1 must receive them as generated.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub num_vertices: usize,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
    pub weights: Vec<f64>,
}

impl EdgeList {
    pub fn new(
        num_vertices: usize,
        sources: Vec<usize>,
        targets: Vec<usize>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        if sources.len() != targets.len() || sources.len() != weights.len() {
            return Err(Error::Validation(format!(
                "edge array lengths differ: {} sources, {} targets, {} weights",
                sources.len(),
                targets.len(),
                weights.len()
            )));
        }
        for (&u, &v) in sources.iter().zip(&targets) {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) out of range for {num_vertices} vertices"
                )));
            }
        }
        Ok(EdgeList {
            num_vertices,
            sources,
            targets,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// Iterate over `(source, target, weight)` tuples in stored order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.sources
            .iter()
            .zip(&self.targets)
            .zip(&self.weights)
            .map(|((&u, &v), &w)| (u, v, w))
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Generate an edge list with the vertex permutation drawn from its own
/// seed. Quadrant selection, weights, and the edge shuffle still come from
/// `params.seed`, so varying `perm_seed` relabels the same underlying graph.
pub fn generate_with_permutation_seed(params: &GenParams, perm_seed: u64) -> Result<EdgeList> {
    params.validate()?;
    let n = params.num_vertices()?;
    let m = params.num_edges()?;

    let [a, b, c, _] = params.initiator;
    let ab = a + b;
    let abc = ab + c;

    let mut quad_rng = stream_rng(params.seed, STREAM_QUADRANTS);
    let mut sources = Vec::with_capacity(m);
    let mut targets = Vec::with_capacity(m);
    for _ in 0..m {
        let mut u = 0usize;
        let mut v = 0usize;
        for _ in 0..params.scale {
            let r: f64 = quad_rng.random();
            // Quadrants: a = (0,0), b = (0,1), c = (1,0), d = (1,1).
            let (ubit, vbit) = if r < a {
                (0, 0)
            } else if r < ab {
                (0, 1)
            } else if r < abc {
                (1, 0)
            } else {
                (1, 1)
            };
            u = (u << 1) | ubit;
            v = (v << 1) | vbit;
        }
        sources.push(u);
        targets.push(v);
    }

    let mut weight_rng = stream_rng(params.seed, STREAM_WEIGHTS);
    let weights: Vec<f64> = (0..m).map(|_| weight_rng.random::<f64>()).collect();

    // Random vertex relabeling, then a uniform shuffle of edge order. Kernel 1
    // partitions the array by position, so order randomness must be preserved
    // through persistence.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut stream_rng(perm_seed, STREAM_PERMUTE));
    for u in &mut sources {
        *u = perm[*u];
    }
    for v in &mut targets {
        *v = perm[*v];
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut stream_rng(params.seed, STREAM_SHUFFLE));
    let sources = order.iter().map(|&i| sources[i]).collect();
    let targets = order.iter().map(|&i| targets[i]).collect();
    let weights = order.iter().map(|&i| weights[i]).collect();

    Ok(EdgeList {
        num_vertices: n,
        sources,
        targets,
        weights,
    })
}

/// Generate a random Kronecker edge list: `2^scale` vertices and
/// `2^scale * edgefactor` edges, vertex labels permuted and edge order
/// shuffled. Deterministic under `params`.
pub fn generate(params: &GenParams) -> Result<EdgeList> {
    generate_with_permutation_seed(params, params.seed)
}

/// Undirected degree per vertex, as a degree -> vertex-count map. Each edge
/// contributes to both endpoints; a self-loop contributes 2 to its vertex.
pub fn degree_histogram(edges: &EdgeList) -> BTreeMap<usize, usize> {
    let degrees = vertex_degrees(edges);
    let mut hist = BTreeMap::new();
    for d in degrees {
        *hist.entry(d).or_insert(0) += 1;
    }
    hist
}

/// Per-vertex undirected degree (self-loop counts 2).
pub fn vertex_degrees(edges: &EdgeList) -> Vec<usize> {
    let mut degrees = vec![0usize; edges.num_vertices];
    for (u, v, _) in edges.iter() {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    degrees
}
