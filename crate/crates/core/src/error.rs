use std::path::PathBuf;

/// Errors produced by generation, I/O, construction, and the kernels.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("capacity: 2^{scale} * {edgefactor} edges overflow the edge-count representation")]
    Capacity { scale: u32, edgefactor: u64 },

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("file error at {path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at {path}:{line}: {detail}")]
    Parse {
        path: PathBuf,
        line: usize,
        detail: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("vertex {vertex} out of range (graph has {num_vertices} vertices)")]
    Bounds { vertex: i64, num_vertices: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("benchmark integrity error: {0}")]
    BenchIntegrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
