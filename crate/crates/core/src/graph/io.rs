//! Text formats: a plain 0-indexed edge list and the DIMACS `p edge` format.

use std::fmt::Write as _;

use super::{Graph, NormalizationLog, VertexId};
use crate::error::{Error, Result};

/// Parses the edge-list format: an optional header line holding the vertex
/// count, then one `u v` pair per line (0-indexed). Blank lines and lines
/// starting with `#` are ignored. Without a header the vertex count is one
/// more than the largest index seen.
pub fn parse_edge_list(text: &str) -> Result<(Graph, NormalizationLog)> {
    let mut declared: Option<usize> = None;
    let mut seen_data = false;
    let mut pairs: Vec<(VertexId, VertexId, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [n] if !seen_data => {
                declared = Some(parse_index(n, line_no)?);
            }
            [a, b] => {
                pairs.push((parse_index(a, line_no)?, parse_index(b, line_no)?, line_no));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"u v\", found {line:?}"),
                })
            }
        }
        seen_data = true;
    }

    let n = match declared {
        Some(n) => {
            if let Some(&(a, b, line)) = pairs.iter().find(|&&(a, b, _)| a >= n || b >= n) {
                return Err(Error::VertexOutOfRange { line, index: a.max(b), n });
            }
            n
        }
        None => match pairs.iter().map(|&(a, b, _)| a.max(b)).max() {
            Some(max) => max + 1,
            None => return Err(Error::EmptyInput),
        },
    };
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    Graph::normalize(n, pairs.into_iter().map(|(a, b, _)| (a, b)))
}

/// Parses DIMACS-style input: `c` comment lines, a single `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-indexed endpoints. A header edge
/// count that disagrees with the number of `e` lines is recorded as a
/// warning in the log.
pub fn parse_dimacs(text: &str) -> Result<(Graph, NormalizationLog)> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut any_line = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        any_line = true;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["c", ..] => {}
            ["p", "edge" | "col", n, m] => {
                if header.is_some() {
                    return Err(Error::Parse { line: line_no, message: "duplicate \"p\" header".into() });
                }
                header = Some((parse_index(n, line_no)?, parse_index(m, line_no)?));
            }
            ["e", a, b] => {
                let Some((n, _)) = header else {
                    return Err(Error::MissingHeader);
                };
                let mut ends = [0; 2];
                for (slot, tok) in ends.iter_mut().zip([a, b]) {
                    let x = parse_index(tok, line_no)?;
                    if x == 0 || x > n {
                        return Err(Error::VertexOutOfRange { line: line_no, index: x, n });
                    }
                    *slot = x - 1;
                }
                pairs.push((ends[0], ends[1]));
            }
            _ => {
                return Err(Error::Parse { line: line_no, message: format!("malformed descriptor {line:?}") })
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(if any_line { Error::MissingHeader } else { Error::EmptyInput });
    };
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let found = pairs.len();
    let (g, mut log) = Graph::normalize(n, pairs)?;
    if found != m {
        log.warnings.push(format!("header declares {m} edges but {found} edge lines were read"));
    }
    Ok((g, log))
}

/// Writes the edge-list format: the vertex count, then sorted edges, one per
/// line, each terminated by `\n`.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.m() + 1));
    let _ = writeln!(out, "{}", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}
