//! Edge-list text: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. `#` starts a comment; blank lines are skipped.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: endpoint out of range in edge {u} {v} (order {n})")]
    EndpointOutOfRange { line: usize, u: usize, v: usize, n: usize },
    #[error("line {line}: loop at vertex {v}")]
    Loop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let mut num = |what: &str| -> Result<usize, EdgeListError> {
        let tok = it.next().ok_or_else(|| EdgeListError::Parse {
            line,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| EdgeListError::Parse {
            line,
            msg: format!("{what} {tok:?} is not a nonnegative integer"),
        })
    };
    let a = num("first field")?;
    let b = num("second field")?;
    if let Some(extra) = it.next() {
        return Err(EdgeListError::Parse {
            line,
            msg: format!("unexpected trailing field {extra:?}"),
        });
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, htext) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = pair(hline, htext)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(EdgeListError::EndpointOutOfRange { line, u, v, n });
        }
        if u == v {
            return Err(EdgeListError::Loop { line, v: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::Duplicate { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges).expect("edges were validated"))
}

/// Header plus one `u v` line per edge, `u < v`, in lexicographic order.
pub fn write(g: &Graph) -> String {
    let edges: Vec<_> = g.edges().collect();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
