use super::Graph;

/// A simple cycle, stored in walk order.
///
/// `vertices[k]` and `vertices[k + 1]` (cyclically) are joined by `edges[k]`.
/// Canonical orientation: the walk starts at the cycle's smallest vertex and
/// leaves towards the smaller of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.edges
    }

    /// Builds a cycle from a closed vertex walk `v_0 v_1 .. v_{m-1}` in `g`.
    /// Returns `None` when the walk is not a simple cycle of `g`.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Option<Cycle> {
        let m = vertices.len();
        if m < 3 {
            return None;
        }
        let mut distinct = vertices.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != m {
            return None;
        }
        let edges =
            (0..m).map(|k| g.edge_index(vertices[k], vertices[(k + 1) % m])).collect::<Option<Vec<_>>>()?;
        Some(Cycle { vertices: vertices.to_vec(), edges })
    }

    /// The same cycle traversed backwards from the same start vertex.
    pub fn reversed(&self) -> Cycle {
        let m = self.vertices.len();
        let vertices = (0..m).map(|k| self.vertices[(m - k) % m]).collect();
        let edges = (0..m).map(|k| self.edges[m - 1 - k]).collect();
        Cycle { vertices, edges }
    }
}

/// Every simple cycle of `g` exactly once, in canonical orientation.
///
/// Backtracking search: for each start vertex `s`, extend simple paths through
/// vertices larger than `s`, and close a cycle when the path returns to `s`
/// with its second vertex smaller than its last. Forests yield nothing.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    let n = g.num_vertices();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    let mut path_edges = Vec::with_capacity(n);
    for s in 0..n {
        on_path[s] = true;
        path.push(s);
        extend(g, s, &mut on_path, &mut path, &mut path_edges, &mut out);
        path.pop();
        on_path[s] = false;
    }
    out
}

fn extend(
    g: &Graph,
    start: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    path_edges: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().unwrap();
    for &(w, e) in g.incident(v) {
        if w == start {
            if path.len() >= 3 && path[1] < v {
                let mut edges = path_edges.clone();
                edges.push(e);
                out.push(Cycle { vertices: path.clone(), edges });
            }
            continue;
        }
        if w < start || on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        path_edges.push(e);
        extend(g, start, on_path, path, path_edges, out);
        path_edges.pop();
        path.pop();
        on_path[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, path_graph, star};

    fn length_histogram(cycles: &[Cycle]) -> Vec<(usize, usize)> {
        let mut hist = std::collections::BTreeMap::new();
        for c in cycles {
            *hist.entry(c.len()).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }

    #[test]
    fn forests_have_no_cycles() {
        assert!(enumerate_cycles(&star(5).unwrap()).is_empty());
        assert!(enumerate_cycles(&path_graph(5).unwrap()).is_empty());
    }

    #[test]
    fn single_cycle_orientation() {
        let c6 = cycle_graph(6).unwrap();
        let cycles = enumerate_cycles(&c6);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(cycles[0].edge_indices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn complete_bipartite_counts() {
        let cycles = enumerate_cycles(&complete_bipartite(2, 3).unwrap());
        assert_eq!(length_histogram(&cycles), vec![(4, 3)]);

        // C(a,k) C(b,k) k! (k-1)! / 2 cycles of length 2k in K_{a,b}.
        let cycles = enumerate_cycles(&complete_bipartite(4, 5).unwrap());
        assert_eq!(cycles.len(), 660);
        assert_eq!(length_histogram(&cycles), vec![(4, 60), (6, 240), (8, 360)]);
    }

    #[test]
    fn triangle_is_found_once() {
        let c3 = cycle_graph(3).unwrap();
        assert_eq!(enumerate_cycles(&c3).len(), 1);
    }

    #[test]
    fn from_vertices_and_reverse() {
        let c4 = cycle_graph(4).unwrap();
        let c = Cycle::from_vertices(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(c, enumerate_cycles(&c4)[0]);
        let r = c.reversed();
        assert_eq!(r.vertices(), &[0, 3, 2, 1]);
        assert_eq!(r.edge_indices(), &[3, 2, 1, 0]);
        assert!(Cycle::from_vertices(&c4, &[0, 2, 1, 3]).is_none());
    }
}
