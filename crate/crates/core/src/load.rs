//! Whitespace-separated edge-list reader (KONECT `out.*` layout).
//!
//! Column 1 tokens become left vertices and column 2 tokens become right
//! vertices; further columns are ignored. Dense ids are handed out in order of
//! first appearance on each side.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::LoadError;
use crate::graph::{BipartiteGraph, VertexId};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Reject inputs that contain no edges.
    pub strict: bool,
}

#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: BipartiteGraph,
    /// Repeated edges that were collapsed.
    pub duplicate_edges: usize,
    pub comment_lines: usize,
}

#[derive(Default)]
struct LabelTable {
    ids: HashMap<Vec<u8>, VertexId>,
    labels: Vec<String>,
}

impl LabelTable {
    fn intern(&mut self, token: &[u8], line: usize) -> Result<VertexId, LoadError> {
        if let Some(&id) = self.ids.get(token) {
            return Ok(id);
        }
        let label = std::str::from_utf8(token).map_err(|_| LoadError::InvalidUtf8 { line })?;
        let id = VertexId::try_from(self.labels.len()).map_err(|_| crate::error::GraphError::TooManyVertices)?;
        self.ids.insert(token.to_vec(), id);
        self.labels.push(label.to_owned());
        Ok(id)
    }
}

fn is_blank(b: &u8) -> bool {
    *b == b' ' || *b == b'\t'
}

pub fn load_edge_list<R: BufRead>(mut source: R, options: &LoadOptions) -> Result<LoadedGraph, LoadError> {
    let mut left = LabelTable::default();
    let mut right = LabelTable::default();
    let mut edges = Vec::new();
    let mut comment_lines = 0;
    let mut buf = Vec::new();
    let mut line_no = 0;

    loop {
        buf.clear();
        if source.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let mut line = buf.as_slice();
        if let Some(rest) = line.strip_suffix(b"\n") {
            line = rest;
        }
        if let Some(rest) = line.strip_suffix(b"\r") {
            line = rest;
        }
        let start = line.iter().position(|b| !is_blank(b)).unwrap_or(line.len());
        let line = &line[start..];
        match line.first() {
            None => continue,
            Some(b'%') | Some(b'#') => {
                comment_lines += 1;
                continue;
            }
            Some(_) => {}
        }
        let mut tokens = line.split(is_blank).filter(|t| !t.is_empty());
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(LoadError::MalformedLine { line: line_no });
        };
        let u = left.intern(a, line_no)?;
        let v = right.intern(b, line_no)?;
        edges.push((u, v));
    }

    if edges.is_empty() && options.strict {
        return Err(LoadError::EmptyGraph);
    }
    let (graph, duplicate_edges) = BipartiteGraph::from_labeled_edges(left.labels, right.labels, edges)?;
    Ok(LoadedGraph { graph, duplicate_edges, comment_lines })
}
