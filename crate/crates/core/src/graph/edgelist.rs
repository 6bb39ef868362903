//! Plain edge-list text: `"n; u v; u v; ..."`.

use super::{Graph, GraphError};
use std::fmt::Write;

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = g.order().to_string();
    for (u, v) in g.edges() {
        let _ = write!(s, "; {u} {v}");
    }
    s
}

/// Parses `"n; u v; u v; ..."`. Empty segments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut parts = text.trim().split(';');
    let head = parts.next().unwrap_or("").trim();
    let n: usize = head
        .parse()
        .map_err(|_| EdgeListError::BadOrder(head.to_string()))?;
    let mut edges = Vec::new();
    for part in parts {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let ids: Vec<&str> = part.split_whitespace().collect();
        let parse = |s: &str| s.parse::<usize>().map_err(|_| EdgeListError::BadEdge(part.to_string()));
        match ids.as_slice() {
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => return Err(EdgeListError::BadEdge(part.to_string())),
        }
    }
    Ok(Graph::new(n, &edges)?)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("bad vertex count {0:?}")]
    BadOrder(String),
    #[error("bad edge {0:?}, expected two vertex ids")]
    BadEdge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
