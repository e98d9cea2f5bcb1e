use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Parses an edge list: one `u v` pair per line, `#` starts a comment.
///
/// Labels are arbitrary non-negative integers, compacted to `0..n` in order of
/// first appearance. Edge order is file order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: HashMap<u64, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |label: u64| {
        let next = labels.len();
        *labels.entry(label).or_insert(next)
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: lineno + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(format!("expected \"u v\", got {line:?}")));
        }
        let mut ends = [0u64; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| parse_err(format!("invalid vertex label {field:?}")))?;
        }
        if ends[0] == ends[1] {
            return Err(Error::LoopEdge(intern(ends[0])));
        }
        edges.push((intern(ends[0]), intern(ends[1])));
    }
    let n = labels.len();
    Graph::new(n, edges)
}

/// JSON graph document: `{"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self { n: g.num_vertices(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(doc: GraphJson) -> Result<Self> {
        Graph::new(doc.n, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    Graph::try_from(doc)
}

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_edge_list("0 1\n").unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 1));
    }

    #[test]
    fn four_cycle_with_comments() {
        let g = parse_edge_list("# C4\n0 1\n1 2 # second\n\n2 3\n3 0\n").unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (4, 4));
    }

    #[test]
    fn labels_compacted_in_first_occurrence_order() {
        let g = parse_edge_list("10 7\n7 42\n").unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_edge_list("0 0"), Err(Error::LoopEdge(_))));
        assert!(matches!(parse_edge_list("0 1\n1 0"), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\n-1 2"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn json_round_trip() {
        let g = parse_graph_json(r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,0]]}"#).unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(parse_graph_json(&g.to_json()).unwrap(), g);
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap().num_edges(), 4);
    }
}
