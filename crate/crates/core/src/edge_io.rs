//! Text persistence for edge lists.
//!
//! The file is the fixed handoff between generation and the kernels:
//! one header line `num_vertices num_edges version`, then one line `u v w`
//! per edge. Weights are written in the shortest decimal form that parses
//! back to the identical value, so write/read round trips are bitwise.
//! Edge order is preserved exactly; the generator's shuffle must survive
//! persistence because parallel construction partitions by position.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::kronecker::EdgeList;

pub const FORMAT_VERSION: u64 = 1;

/// Default edge-file name used by the CLI when no path is given.
pub const DEFAULT_EDGE_FILE: &str = "kronecker.txt";

fn file_err(path: &Path, source: std::io::Error) -> Error {
    Error::File {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_edge_file(path: impl AsRef<Path>, edges: &EdgeList) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| file_err(path, e))?;
    let mut out = BufWriter::new(file);
    let io = |e| file_err(path, e);
    writeln!(out, "{} {} {}", edges.num_vertices, edges.len(), FORMAT_VERSION).map_err(io)?;
    for (u, v, w) in edges.iter() {
        // `{}` on f64 is the shortest representation that round-trips.
        writeln!(out, "{u} {v} {w}").map_err(io)?;
    }
    out.flush().map_err(io)
}

pub fn read_edge_file(path: impl AsRef<Path>) -> Result<EdgeList> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| file_err(path, e))?;
    let mut lines = BufReader::new(file).lines();

    let parse_err = |line: usize, detail: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        detail,
    };

    let header = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line".into()))?
        .map_err(|e| file_err(path, e))?;
    let mut fields = header.split_whitespace();
    let mut next_int = |name: &str| -> Result<u64> {
        fields
            .next()
            .ok_or_else(|| parse_err(1, format!("header missing {name}")))?
            .parse()
            .map_err(|e| parse_err(1, format!("bad {name}: {e}")))
    };
    let num_vertices = next_int("num_vertices")? as usize;
    let num_edges = next_int("num_edges")? as usize;
    let version = next_int("version")?;
    if version != FORMAT_VERSION {
        return Err(parse_err(1, format!("unsupported format version {version}")));
    }

    let mut sources = Vec::with_capacity(num_edges);
    let mut targets = Vec::with_capacity(num_edges);
    let mut weights = Vec::with_capacity(num_edges);
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let line = line.map_err(|e| file_err(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut field = |name: &str| {
            fields
                .next()
                .ok_or_else(|| parse_err(lineno, format!("missing {name}")))
        };
        let u: usize = field("source")?
            .parse()
            .map_err(|e| parse_err(lineno, format!("bad source: {e}")))?;
        let v: usize = field("target")?
            .parse()
            .map_err(|e| parse_err(lineno, format!("bad target: {e}")))?;
        let w: f64 = field("weight")?
            .parse()
            .map_err(|e| parse_err(lineno, format!("bad weight: {e}")))?;
        if u >= num_vertices || v >= num_vertices {
            return Err(Error::Validation(format!(
                "{}:{lineno}: edge ({u}, {v}) out of range for {num_vertices} vertices",
                path.display()
            )));
        }
        sources.push(u);
        targets.push(v);
        weights.push(w);
    }

    if sources.len() != num_edges {
        return Err(Error::Validation(format!(
            "{}: header declares {num_edges} edges but file has {}",
            path.display(),
            sources.len()
        )));
    }

    EdgeList::new(num_vertices, sources, targets, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(body: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(body.as_bytes()).unwrap();
        f
    }

    #[test]
    fn writes_documented_format() {
        let edges = EdgeList::new(2, vec![0], vec![1], vec![0.5]).unwrap();
        let f = tempfile::NamedTempFile::new().unwrap();
        write_edge_file(f.path(), &edges).unwrap();
        assert_eq!(std::fs::read_to_string(f.path()).unwrap(), "2 1 1\n0 1 0.5\n");
    }

    #[test]
    fn empty_edge_list_is_header_only() {
        let edges = EdgeList::new(4, vec![], vec![], vec![]).unwrap();
        let f = tempfile::NamedTempFile::new().unwrap();
        write_edge_file(f.path(), &edges).unwrap();
        assert_eq!(std::fs::read_to_string(f.path()).unwrap(), "4 0 1\n");
        assert_eq!(read_edge_file(f.path()).unwrap(), edges);
    }

    #[test]
    fn reads_documented_format() {
        let f = write_temp("2 1 1\n0 1 0.5\n");
        let edges = read_edge_file(f.path()).unwrap();
        assert_eq!(edges, EdgeList::new(2, vec![0], vec![1], vec![0.5]).unwrap());
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let f = write_temp("2 1 1\n0 5 0.5\n");
        assert!(matches!(
            read_edge_file(f.path()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn rejects_count_mismatch() {
        let f = write_temp("2 2 1\n0 1 0.5\n");
        assert!(matches!(
            read_edge_file(f.path()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn rejects_malformed_line_with_line_number() {
        let f = write_temp("2 1 1\n0 x 0.5\n");
        match read_edge_file(f.path()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_preserves_order_and_bits() {
        let edges = EdgeList::new(
            4,
            vec![3, 0, 0, 2, 1],
            vec![3, 1, 1, 0, 1],
            vec![0.1, 0.25, 0.25, 1.0 / 3.0, 1e-300],
        )
        .unwrap();
        let f = tempfile::NamedTempFile::new().unwrap();
        write_edge_file(f.path(), &edges).unwrap();
        let back = read_edge_file(f.path()).unwrap();
        assert_eq!(back, edges);
        let bits: Vec<u64> = back.weights.iter().map(|w| w.to_bits()).collect();
        let expect: Vec<u64> = edges.weights.iter().map(|w| w.to_bits()).collect();
        assert_eq!(bits, expect);
    }
}
