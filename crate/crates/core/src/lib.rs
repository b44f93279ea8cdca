//! Graph500-style benchmark kernels: Kronecker edge-list generation, graph
//! construction under CSR or adjacency-map representations, sequential and
//! level-synchronized parallel BFS, Dijkstra SSSP, result validation, and
//! a timing/speedup/TEPS harness.
//!
//! The edge list is the sole contract between the generator and the
//! kernels; it is persisted as a text file so repeated runs see the
//! identical graph. Build with the default `parallel` feature for
//! rayon-backed kernels, or without it for a fully sequential build.

pub mod bench;
pub mod bfs;
pub mod edge_io;
pub mod error;
pub mod graph;
pub mod kronecker;
pub mod result_io;
pub mod sssp;
pub mod validate;

pub use error::{Error, Result};
pub use graph::{Graph, Repr};
pub use kronecker::{EdgeList, GenParams};
