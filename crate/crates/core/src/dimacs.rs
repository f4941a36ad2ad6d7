//! DIMACS ASCII edge-format text I/O.
//!
//! Input is tolerant: comment lines anywhere, blank lines, edges in either
//! endpoint order, duplicate edges. Output is canonical: one `p edge n m`
//! header, then each edge exactly once as `e u v` with `u < v`, 1-indexed,
//! ascending, one per line, no trailing whitespace.

use std::fmt;
use std::fmt::Write as _;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimacsError {
    /// No `p edge` line anywhere in the input.
    MissingHeader,
    DuplicateHeader { line: usize },
    EdgeBeforeHeader { line: usize },
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    SelfLoop { line: usize, vertex: usize },
    Malformed { line: usize, reason: String },
}

impl fmt::Display for DimacsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimacsError::MissingHeader => write!(f, "missing 'p edge <n> <m>' line"),
            DimacsError::DuplicateHeader { line } => {
                write!(f, "line {line}: duplicate 'p' line")
            }
            DimacsError::EdgeBeforeHeader { line } => {
                write!(f, "line {line}: edge before 'p edge' header")
            }
            DimacsError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "line {line}: vertex {vertex} out of range 1..={n}")
            }
            DimacsError::SelfLoop { line, vertex } => {
                write!(f, "line {line}: self-loop at vertex {vertex}")
            }
            DimacsError::Malformed { line, reason } => write!(f, "line {line}: {reason}"),
        }
    }
}

impl std::error::Error for DimacsError {}

/// Parses DIMACS edge-format text. The header's edge count is treated as a
/// capacity hint only; the real count is recomputed from the edge lines.
pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut rows: Option<Vec<VertexSet>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if rows.is_some() {
                    return Err(DimacsError::DuplicateHeader { line });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(DimacsError::Malformed {
                        line,
                        reason: format!("expected 'p edge <n> <m>', got '{trimmed}'"),
                    });
                }
                let n: usize = fields[2].parse().map_err(|_| DimacsError::Malformed {
                    line,
                    reason: format!("bad vertex count '{}'", fields[2]),
                })?;
                // fields[3] (m) is a hint; recomputed below
                fields[3].parse::<usize>().map_err(|_| DimacsError::Malformed {
                    line,
                    reason: format!("bad edge count '{}'", fields[3]),
                })?;
                rows = Some(vec![VertexSet::empty(n); n]);
            }
            "e" => {
                let rows = rows
                    .as_mut()
                    .ok_or(DimacsError::EdgeBeforeHeader { line })?;
                if fields.len() != 3 {
                    return Err(DimacsError::Malformed {
                        line,
                        reason: format!("expected 'e <u> <v>', got '{trimmed}'"),
                    });
                }
                let n = rows.len();
                let endpoint = |s: &str| -> Result<usize, DimacsError> {
                    let v: usize = s.parse().map_err(|_| DimacsError::Malformed {
                        line,
                        reason: format!("bad vertex '{s}'"),
                    })?;
                    if v == 0 || v > n {
                        return Err(DimacsError::VertexOutOfRange { line, vertex: v, n });
                    }
                    Ok(v - 1)
                };
                let u = endpoint(fields[1])?;
                let v = endpoint(fields[2])?;
                if u == v {
                    return Err(DimacsError::SelfLoop {
                        line,
                        vertex: u + 1,
                    });
                }
                rows[u].insert(v);
                rows[v].insert(u);
            }
            _ => {
                return Err(DimacsError::Malformed {
                    line,
                    reason: format!("unrecognized line '{trimmed}'"),
                });
            }
        }
    }
    match rows {
        Some(rows) => Ok(Graph::from_rows(rows)),
        None => Err(DimacsError::MissingHeader),
    }
}

/// Renders a graph in canonical DIMACS edge format.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.size());
    writeln!(out, "p edge {} {}", g.order(), g.size()).unwrap();
    for u in 0..g.order() {
        for v in g.adjacency(u).iter() {
            if v > u {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}
