use super::Graph;
use crate::error::Result;

/// Size of a maximum matching, by augmenting paths from part A into part B.
///
/// Only bipartite graphs are supported; anything else is `NotBipartite`.
pub fn matching_number(g: &Graph) -> Result<usize> {
    let bp = g.bipartition()?;
    let mut mate: Vec<Option<usize>> = vec![None; g.num_vertices()];
    let mut size = 0;
    for &a in bp.part_a() {
        let mut visited = vec![false; g.num_vertices()];
        if augment(g, a, &mut visited, &mut mate) {
            size += 1;
        }
    }
    Ok(size)
}

/// Kuhn's search: `mate[b]` is the A-vertex currently matched to `b`.
fn augment(g: &Graph, a: usize, visited: &mut [bool], mate: &mut [Option<usize>]) -> bool {
    for b in g.neighbors(a) {
        if visited[b] {
            continue;
        }
        visited[b] = true;
        if mate[b].map_or(true, |a2| augment(g, a2, visited, mate)) {
            mate[b] = Some(a);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{complete_bipartite, cycle_graph, path_graph, star};

    #[test]
    fn known_values() {
        assert_eq!(matching_number(&complete_bipartite(2, 3).unwrap()).unwrap(), 2);
        assert_eq!(matching_number(&complete_bipartite(4, 4).unwrap()).unwrap(), 4);
        assert_eq!(matching_number(&cycle_graph(6).unwrap()).unwrap(), 3);
        assert_eq!(matching_number(&path_graph(4).unwrap()).unwrap(), 2);
        assert_eq!(matching_number(&star(6).unwrap()).unwrap(), 1);
    }

    #[test]
    fn rejects_odd_cycles() {
        assert!(matches!(matching_number(&cycle_graph(5).unwrap()), Err(Error::NotBipartite)));
    }
}
