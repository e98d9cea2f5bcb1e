//! Finite simple graphs and the combinatorics the toric pipeline needs:
//! bipartitions, connectivity, cycles, matchings, named families and
//! canonical forms.
//!
//! Vertices are `0..n`. Edges are kept in insertion order, and that order
//! fixes the edge variables `e_1..e_q` of the polynomial ring downstream.

mod bounds;
mod canon;
mod construct;
mod cycles;
mod matching;
mod parse;

pub use bounds::{jackson_min_edges, max_edges_for_reg};
pub(crate) use canon::bipartite_from_columns;
pub use canon::{canonical_form, canonical_matrix, CanonicalCode};
pub use construct::{
    complete_bipartite, construct_g_nrp, construct_h_nrp, cycle_graph, path_graph, realizing_graph, star,
};
pub use cycles::{enumerate_cycles, Cycle};
pub use matching::matching_number;
pub use parse::{parse_edge_list, parse_graph_json, GraphJson};

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `adj[v]` lists `(neighbour, edge index)` in edge order.
    adj: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `n` vertices. Each edge is stored as `(min, max)`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            let idx = stored.len();
            adj[u].push((v, idx));
            adj[v].push((u, idx));
            stored.push(e);
        }
        Ok(Self { n, edges: stored, adj })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, edge index)` pairs incident to `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.adj.get(u)?.iter().find_map(|&(w, idx)| (w == v).then_some(idx))
    }

    /// The same graph without edge `idx`; the remaining edges keep their relative order.
    pub fn without_edge(&self, idx: usize) -> Graph {
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, &e)| e);
        Graph::new(self.n, edges).expect("subgraph of a valid graph is valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// A forest has `q = n - c` edges where `c` counts components.
    pub fn is_forest(&self) -> bool {
        self.num_edges() + self.num_components() == self.n
    }

    pub fn num_components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Two-colours each component by BFS, starting every component's smallest
    /// vertex in part A.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for w in self.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return Err(Error::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        let in_b: Vec<bool> = colour.into_iter().map(|c| c.unwrap()).collect();
        Ok(Bipartition::from_sides(in_b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }
}

/// A split of the vertex set such that every edge meets both parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    part_a: Vec<usize>,
    part_b: Vec<usize>,
    in_b: Vec<bool>,
}

impl Bipartition {
    fn from_sides(in_b: Vec<bool>) -> Self {
        let (part_b, part_a): (Vec<usize>, Vec<usize>) = (0..in_b.len()).partition(|&v| in_b[v]);
        Self { part_a, part_b, in_b }
    }

    pub fn part_a(&self) -> &[usize] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.part_b
    }

    pub fn in_part_b(&self, v: usize) -> bool {
        self.in_b[v]
    }

    /// Part sizes as `(|A|, |B|)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.part_a.len(), self.part_b.len())
    }

    /// Checks the bipartition against `g`: the parts cover `V` disjointly and
    /// every edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.in_b.len() == g.num_vertices() && g.edges().iter().all(|&(u, v)| self.in_b[u] != self.in_b[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::LoopEdge(0))));
        assert!(matches!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
    }

    #[test]
    fn bipartition_sizes() {
        let c4 = cycle_graph(4).unwrap();
        let bp = c4.bipartition().unwrap();
        assert_eq!(bp.sizes(), (2, 2));
        assert!(bp.is_valid_for(&c4));

        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.bipartition().unwrap().sizes(), (2, 3));

        let c3 = cycle_graph(3).unwrap();
        assert!(matches!(c3.bipartition(), Err(Error::NotBipartite)));
    }

    #[test]
    fn connectivity() {
        assert!(path_graph(4).unwrap().is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(complete_bipartite(3, 3).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
    }

    #[test]
    fn forests() {
        assert!(star(5).unwrap().is_forest());
        assert!(Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_forest());
        assert!(!cycle_graph(4).unwrap().is_forest());
    }

    #[test]
    fn edge_removal_keeps_order() {
        let c4 = cycle_graph(4).unwrap();
        let p = c4.without_edge(1);
        assert_eq!(p.edges(), &[(0, 1), (2, 3), (0, 3)]);
        assert!(p.is_connected());
    }
}
