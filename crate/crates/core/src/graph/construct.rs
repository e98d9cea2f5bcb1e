//! Named graph families and the witness graphs realizing a prescribed
//! (regularity, projective dimension) pair.

use super::Graph;
use crate::error::{Error, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// `K_{a,b}` with part A = `0..a`, part B = `a..a+b`, edges in lexicographic
/// order of `(i, j)`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid(format!("K_{{a,b}} needs a, b >= 1, got ({a}, {b})")));
    }
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
    Graph::new(a + b, edges)
}

/// `C_m` with edges `{i, i+1 mod m}` in walk order.
pub fn cycle_graph(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(invalid(format!("C_m needs m >= 3, got {m}")));
    }
    Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
}

/// The star `K_{1,n-1}` centred at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("star needs n >= 2, got {n}")));
    }
    Graph::new(n, (1..n).map(|v| (0, v)))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("path needs n >= 2, got {n}")));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Shared vertex layout of the two witness families: `x_1..x_{r+1}` are
/// `0..=r`, `y_1..y_{r+1}` follow, then the pendant vertices `z_1..z_{n-2r-2}`.
struct Layout {
    r: usize,
    pendants: usize,
}

impl Layout {
    fn new(n: usize, r: usize) -> Result<Self> {
        if n < 4 {
            return Err(invalid(format!("need n >= 4, got {n}")));
        }
        if r == 0 || r >= n / 2 {
            return Err(invalid(format!("need 0 < r < floor(n/2) = {}, got r = {r}", n / 2)));
        }
        // r <= floor(n/2) - 1 forces n - 2 - 2r >= 0.
        let pendants = n
            .checked_sub(2 * r + 2)
            .ok_or_else(|| Error::Internal(format!("n - 2r - 2 < 0 for n = {n}, r = {r}")))?;
        Ok(Self { r, pendants })
    }

    /// 1-based `x_i`.
    fn x(&self, i: usize) -> usize {
        i - 1
    }

    fn y(&self, j: usize) -> usize {
        self.r + j
    }

    fn z(&self, j: usize) -> usize {
        2 * self.r + 1 + j
    }

    fn pendant_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.pendants).map(|j| (self.x(self.r + 1), self.z(j)))
    }
}

/// The graph `G_{n,r,p}`: a `(2r+2)`-cycle on the `x`/`y` vertices, pendant
/// edges from `x_{r+1}` to every `z_j`, and `p - 1` chords `{x_i, y_j}`.
///
/// Chords are the lexicographically first `(i, j)` pairs not on the cycle.
/// Valid for `n >= 4`, `0 < r < floor(n/2)`, `1 <= p <= r^2`; the result has
/// `n + p - 1` edges.
pub fn construct_g_nrp(n: usize, r: usize, p: usize) -> Result<Graph> {
    let layout = Layout::new(n, r)?;
    if p == 0 || p > r * r {
        return Err(invalid(format!("G_{{n,r,p}} needs 1 <= p <= r^2 = {}, got p = {p}", r * r)));
    }
    let l = &layout;
    let mut edges = Vec::with_capacity(n + p - 1);
    // The cycle runs x_i - y_i - x_{i+1}, closing at x_1.
    let next = |i: usize| if i <= r { i + 1 } else { 1 };
    for i in 1..=r + 1 {
        edges.push((l.x(i), l.y(i)));
        edges.push((l.y(i), l.x(next(i))));
    }
    edges.extend(l.pendant_edges());
    let on_cycle = |i: usize, j: usize| i == j || i == next(j);
    let chords = (1..=r + 1)
        .flat_map(|i| (1..=r + 1).map(move |j| (i, j)))
        .filter(|&(i, j)| !on_cycle(i, j))
        .take(p - 1)
        .map(|(i, j)| (l.x(i), l.y(j)));
    edges.extend(chords);
    finish(n, p, edges)
}

/// The graph `H_{n,r,p}`: a complete `K_{r+1,r+1}` on the `x`/`y` vertices,
/// pendant edges from `x_{r+1}` to every `z_j`, and `p - r^2` extra edges
/// `{x_i, z_j}` with `i <= r`, taken in lexicographic order.
///
/// Valid for `n >= 4`, `0 < r < floor(n/2)`, `r^2 <= p <= r(n-2-r)`.
pub fn construct_h_nrp(n: usize, r: usize, p: usize) -> Result<Graph> {
    let layout = Layout::new(n, r)?;
    let upper = r * (n - 2 - r);
    if p < r * r || p > upper {
        return Err(invalid(format!(
            "H_{{n,r,p}} needs r^2 = {} <= p <= r(n-2-r) = {upper}, got p = {p}",
            r * r
        )));
    }
    let l = &layout;
    let mut edges = Vec::with_capacity(n + p - 1);
    for i in 1..=r + 1 {
        for j in 1..=r + 1 {
            edges.push((l.x(i), l.y(j)));
        }
    }
    edges.extend(l.pendant_edges());
    let extra = (1..=r)
        .flat_map(|i| (1..=l.pendants).map(move |j| (i, j)))
        .take(p - r * r)
        .map(|(i, j)| (l.x(i), l.z(j)));
    edges.extend(extra);
    finish(n, p, edges)
}

fn finish(n: usize, p: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    let g = Graph::new(n, edges)?;
    if g.num_edges() != n + p - 1 {
        return Err(Error::Internal(format!(
            "witness graph has {} edges, expected n + p - 1 = {}",
            g.num_edges(),
            n + p - 1
        )));
    }
    Ok(g)
}

/// A connected bipartite graph with regularity `r` and projective dimension `p`.
///
/// `(0, 0)` gives `K_2`. For `r, p >= 1` the graph lives on
/// `N = 2 + r + max(r, p)` vertices: `G_{N,r,p}` when `p <= r^2`, otherwise
/// `H_{N,r,p}`.
pub fn realizing_graph(r: usize, p: usize) -> Result<Graph> {
    match (r, p) {
        (0, 0) => complete_bipartite(1, 1),
        (0, _) | (_, 0) => {
            Err(invalid(format!("(r, p) = ({r}, {p}) is not realizable: need r = p = 0 or r, p >= 1")))
        }
        _ => {
            let n = 2 + r + r.max(p);
            if p <= r * r {
                construct_g_nrp(n, r, p)
            } else {
                construct_h_nrp(n, r, p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let k22 = complete_bipartite(2, 2).unwrap();
        assert_eq!((k22.num_vertices(), k22.num_edges()), (4, 4));
        let c6 = cycle_graph(6).unwrap();
        assert_eq!((c6.num_vertices(), c6.num_edges()), (6, 6));
        let s4 = star(4).unwrap();
        assert_eq!((s4.num_vertices(), s4.num_edges()), (4, 3));
        assert!(complete_bipartite(0, 3).is_err());
        assert!(cycle_graph(2).is_err());
        assert!(star(1).is_err());
    }

    #[test]
    fn g_10_3_2_matches_the_drawn_example() {
        let g = construct_g_nrp(10, 3, 2).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (10, 11));
        // x1..x4 = 0..3, y1..y4 = 4..7, z1, z2 = 8, 9.
        let expected = [
            (0, 4),
            (1, 4),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 6),
            (3, 7),
            (0, 7), // 8-cycle
            (3, 8),
            (3, 9), // pendants at x4
            (0, 5), // chord {x1, y2}
        ];
        assert_eq!(g.edges(), &expected);
    }

    #[test]
    fn h_10_3_12_shape() {
        let g = construct_h_nrp(10, 3, 12).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (10, 21));
        // K_{4,4}, then x4-z1, x4-z2, then x1-z1, x1-z2, x2-z1.
        assert_eq!(&g.edges()[16..], &[(3, 8), (3, 9), (0, 8), (0, 9), (1, 8)]);
    }

    #[test]
    fn smallest_instances_are_c4() {
        let g = construct_g_nrp(4, 1, 1).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2), (1, 3), (0, 3)]);
        let h = construct_h_nrp(4, 1, 1).unwrap();
        assert_eq!(h.num_edges(), 4);
        assert!(h.edges().iter().all(|&(u, v)| u < 2 && v >= 2));
    }

    #[test]
    fn parameter_ranges() {
        assert!(construct_g_nrp(3, 1, 1).is_err());
        assert!(construct_g_nrp(8, 0, 1).is_err());
        assert!(construct_g_nrp(8, 4, 1).is_err());
        assert!(construct_g_nrp(8, 2, 5).is_err());
        assert!(construct_g_nrp(8, 2, 0).is_err());
        assert!(construct_h_nrp(8, 2, 3).is_err());
        assert!(construct_h_nrp(8, 2, 9).is_err());
        assert!(construct_h_nrp(8, 2, 8).is_ok());
    }

    #[test]
    fn realizing_graph_sizes() {
        assert_eq!(realizing_graph(0, 0).unwrap().num_edges(), 1);
        let g = realizing_graph(1, 1).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (4, 4));
        let g = realizing_graph(2, 7).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (11, 17));
        assert!(realizing_graph(0, 3).is_err());
        assert!(realizing_graph(2, 0).is_err());
    }
}
