//! Text persistence for BFS and SSSP results, so a saved run can be
//! re-validated later. Header `kind root N`, then one line per vertex:
//! `level parent` for BFS, `dist prev` for SSSP.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::bfs::BfsResult;
use crate::error::{Error, Result};
use crate::sssp::SsspResult;

#[derive(Debug, Clone, PartialEq)]
pub enum SavedResult {
    Bfs(BfsResult),
    Sssp(SsspResult),
}

fn file_err(path: &Path, source: std::io::Error) -> Error {
    Error::File {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_result(path: impl AsRef<Path>, result: &SavedResult) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| file_err(path, e))?;
    let mut out = BufWriter::new(file);
    let io = |e| file_err(path, e);
    match result {
        SavedResult::Bfs(r) => {
            writeln!(out, "bfs {} {}", r.root, r.level.len()).map_err(io)?;
            for (l, p) in r.level.iter().zip(&r.parent) {
                writeln!(out, "{l} {p}").map_err(io)?;
            }
        }
        SavedResult::Sssp(r) => {
            writeln!(out, "sssp {} {}", r.source, r.dist.len()).map_err(io)?;
            for (d, p) in r.dist.iter().zip(&r.prev) {
                writeln!(out, "{d} {p}").map_err(io)?;
            }
        }
    }
    out.flush().map_err(io)
}

pub fn read_result(path: impl AsRef<Path>) -> Result<SavedResult> {
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
        .ok_or_else(|| parse_err(1, "missing header".into()))?
        .map_err(|e| file_err(path, e))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [kind, root, n] = fields[..] else {
        return Err(parse_err(1, "expected header 'kind root N'".into()));
    };
    let root: usize = root
        .parse()
        .map_err(|e| parse_err(1, format!("bad root: {e}")))?;
    let n: usize = n
        .parse()
        .map_err(|e| parse_err(1, format!("bad vertex count: {e}")))?;

    let mut first = Vec::with_capacity(n);
    let mut second = Vec::with_capacity(n);
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let line = line.map_err(|e| file_err(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = fields
            .next()
            .ok_or_else(|| parse_err(lineno, "missing first field".into()))?;
        let b = fields
            .next()
            .ok_or_else(|| parse_err(lineno, "missing second field".into()))?;
        first.push(a.to_string());
        second.push(
            b.parse::<i64>()
                .map_err(|e| parse_err(lineno, format!("bad vertex field: {e}")))?,
        );
    }
    if first.len() != n {
        return Err(Error::Validation(format!(
            "{}: header declares {n} vertices but file has {}",
            path.display(),
            first.len()
        )));
    }

    match kind {
        "bfs" => {
            let level = first
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    s.parse::<i64>()
                        .map_err(|e| parse_err(i + 2, format!("bad level: {e}")))
                })
                .collect::<Result<Vec<i64>>>()?;
            Ok(SavedResult::Bfs(BfsResult {
                root,
                level,
                parent: second,
            }))
        }
        "sssp" => {
            let dist = first
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    if s == "inf" {
                        Ok(f64::INFINITY)
                    } else {
                        s.parse::<f64>()
                            .map_err(|e| parse_err(i + 2, format!("bad distance: {e}")))
                    }
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(SavedResult::Sssp(SsspResult {
                source: root,
                dist,
                prev: second,
            }))
        }
        other => Err(parse_err(1, format!("unknown result kind '{other}'"))),
    }
}
