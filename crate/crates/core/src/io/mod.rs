//! Graph, labelling and certificate formats.

pub mod certificate;
pub mod edgelist;
pub mod graph6;
pub mod pattern;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

pub use certificate::{
    read_bundle, verify_bundle, verify_certificate, write_bundle, write_certificate, Certificate, CertificateError,
    Claim, Outcome, Relation, Subject, Verdict,
};
pub use edgelist::EdgeListError;
pub use graph6::Graph6Error;
pub use pattern::{parse_pattern, print_pattern, Group, Pattern, PatternError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("line {line}: {source}")]
    Graph6Line { line: usize, source: Graph6Error },
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("unknown graph format {0:?}, expected edge-list or graph6")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Graph6,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

impl FromStr for GraphFormat {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            _ => Err(IoError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn read_graph(text: &str, format: GraphFormat) -> Result<Graph, IoError> {
    Ok(match format {
        GraphFormat::EdgeList => edgelist::parse(text)?,
        GraphFormat::Graph6 => graph6::decode(text)?,
    })
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => edgelist::write(g),
        GraphFormat::Graph6 => {
            let mut s = graph6::encode(g);
            s.push('\n');
            s
        }
    }
}

pub fn read_graph_file(path: &Path, format: GraphFormat) -> Result<Graph, IoError> {
    read_graph(&read_text(path)?, format)
}

pub(crate) fn read_text(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

/// One graph per nonblank line, as produced by graph generators.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, IoError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| graph6::decode(l).map_err(|source| IoError::Graph6Line { line: i + 1, source }))
        .collect()
}
