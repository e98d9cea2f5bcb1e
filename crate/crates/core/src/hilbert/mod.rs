//! Hilbert series, h-polynomials and the invariant tuple of a toric ring.
//!
//! The toric ring of a connected bipartite graph is Cohen–Macaulay, so its
//! regularity equals the degree of the h-polynomial, its depth equals its
//! dimension, and the projective dimension is `q - depth`. Everything here
//! therefore flows from the Hilbert series of the initial ideal, which has the
//! same Hilbert function as the toric ideal itself.

mod numerator;
mod poly;

pub use numerator::{hilbert_numerator, krull_dimension};
pub use poly::IntPolynomial;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_internal, Error, Result};
use crate::graph::Graph;
use crate::groebner::{buchberger, initial_ideal_in, MonomialIdeal, MonomialOrder, ReducedGB};
use crate::toric::{toric_generators, validate_kernel_membership};

/// Hilbert series data of `S / M` over `q` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `N(t)` with `HS = N(t) / (1-t)^q`.
    pub numerator: IntPolynomial,
    pub krull_dim: usize,
    /// `h(t)` with `HS = h(t) / (1-t)^dim` and `h(1) != 0`.
    pub h_poly: IntPolynomial,
}

/// Divides the numerator by `(1-t)^(q - dim)`.
///
/// Fails with `InexactDivision` if the factor does not divide, and with an
/// internal error if the quotient vanishes at `t = 1`; both mean the dimension
/// does not match the numerator.
pub fn h_polynomial(numerator: &IntPolynomial, q: usize, dim: usize) -> Result<IntPolynomial> {
    if dim > q {
        return Err(Error::InvalidParameters(format!("dimension {dim} exceeds {q} variables")));
    }
    let k = q - dim;
    let mut h = numerator.clone();
    for _ in 0..k {
        h = h.div_one_minus_t().ok_or(Error::InexactDivision(k))?;
    }
    ensure_internal!(h.eval_at_one() != 0, "h(1) = 0 for h = {h}: dimension {dim} too small");
    Ok(h)
}

pub fn hilbert_data(ideal: &MonomialIdeal) -> Result<HilbertData> {
    let numerator = hilbert_numerator(ideal);
    let krull_dim = krull_dimension(ideal);
    let h_poly = h_polynomial(&numerator, ideal.num_vars(), krull_dim)?;
    Ok(HilbertData { numerator, krull_dim, h_poly })
}

/// `(reg, deg h, pdim, depth, dim)` of the toric ring of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub reg: usize,
    pub deg_h: usize,
    pub pdim: usize,
    pub depth: usize,
    pub dim: usize,
}

impl InvariantTuple {
    pub fn as_array(&self) -> [usize; 5] {
        [self.reg, self.deg_h, self.pdim, self.depth, self.dim]
    }
}

impl std::fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {}, {})", self.reg, self.deg_h, self.pdim, self.depth, self.dim)
    }
}

/// The degree of the Hilbert series as a rational function: `deg h - dim`.
pub fn a_invariant(t: &InvariantTuple) -> i64 {
    t.deg_h as i64 - t.dim as i64
}

/// Codegree of the edge polytope of a bipartite graph on `n` vertices,
/// `n - deg h`.
pub fn codegree(t: &InvariantTuple, n: usize) -> i64 {
    n as i64 - t.deg_h as i64
}

/// JSON shape of an invariant tuple with its derived quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub reg: usize,
    pub deg_h: usize,
    pub pdim: usize,
    pub depth: usize,
    pub dim: usize,
    pub a_invariant: i64,
    pub codegree: i64,
}

impl InvariantReport {
    pub fn new(t: &InvariantTuple, n: usize) -> Self {
        Self {
            reg: t.reg,
            deg_h: t.deg_h,
            pdim: t.pdim,
            depth: t.depth,
            dim: t.dim,
            a_invariant: a_invariant(t),
            codegree: codegree(t, n),
        }
    }
}

/// Everything the pipeline computes for one graph.
#[derive(Debug, Clone)]
pub struct ToricAnalysis {
    pub tuple: InvariantTuple,
    pub hilbert: HilbertData,
    pub gb: ReducedGB,
    pub initial: MonomialIdeal,
}

/// Checks the preconditions shared by the invariant computations.
pub(crate) fn require_connected_bipartite(g: &Graph) -> Result<()> {
    if g.num_edges() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    g.bipartition()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Reduced Gröbner basis of the toric ideal of `g` under `order`, with every
/// element checked for membership in the toric ideal.
pub fn toric_groebner_basis(g: &Graph, order: &MonomialOrder) -> Result<ReducedGB> {
    let presentation = toric_generators(g)?;
    let gb = buchberger(order, &presentation.generators);
    for b in gb.elements() {
        ensure_internal!(validate_kernel_membership(g, b), "GB element {b} is not in the toric ideal");
        ensure_internal!(b.is_homogeneous(), "GB element {b} is not homogeneous");
    }
    Ok(gb)
}

/// Runs generators → Gröbner basis → initial ideal → Hilbert series under
/// `order` and assembles the invariant tuple.
pub fn analyze(g: &Graph, order: &MonomialOrder) -> Result<ToricAnalysis> {
    let a = analyze_unchecked(g, order)?;
    let (n, q, t) = (g.num_vertices(), g.num_edges(), a.tuple);
    ensure_internal!(t.dim == n - 1, "dim = {}, expected n - 1 = {}", t.dim, n - 1);
    ensure_internal!(t.pdim == q + 1 - n, "pdim = {} != q - n + 1", t.pdim);
    ensure_internal!(t.reg < n / 2, "reg = {} not below floor(n/2) = {}", t.reg, n / 2);
    Ok(a)
}

/// [`analyze`] without the structural assertions, so that a sweep can report
/// a violated identity instead of failing on it.
pub(crate) fn analyze_unchecked(g: &Graph, order: &MonomialOrder) -> Result<ToricAnalysis> {
    require_connected_bipartite(g)?;
    let q = g.num_edges();
    let gb = toric_groebner_basis(g, order)?;
    let initial = initial_ideal_in(q, &gb);
    let hilbert = hilbert_data(&initial)?;
    let dim = hilbert.krull_dim;
    let deg_h = hilbert.h_poly.degree().unwrap_or(0);
    let depth = dim;
    let tuple = InvariantTuple { reg: deg_h, deg_h, pdim: q - depth, depth, dim };
    Ok(ToricAnalysis { tuple, hilbert, gb, initial })
}

/// The invariant tuple of the toric ring of a connected bipartite graph with
/// at least one edge, computed under degrevlex.
pub fn invariant_tuple(g: &Graph) -> Result<InvariantTuple> {
    analyze(g, &MonomialOrder::default()).map(|a| a.tuple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, star};

    #[test]
    fn h_polynomial_examples() {
        let n = IntPolynomial::new(vec![1, 0, 0, -1]);
        assert_eq!(h_polynomial(&n, 6, 5).unwrap(), IntPolynomial::new(vec![1, 1, 1]));
        assert_eq!(h_polynomial(&IntPolynomial::one(), 4, 4).unwrap(), IntPolynomial::one());
        let n = IntPolynomial::new(vec![1, 0, -3, 2]);
        let h = h_polynomial(&n, 6, 4).unwrap();
        assert_eq!(h, IntPolynomial::new(vec![1, 2]));
        assert_eq!(h.eval_at_one(), 3);
    }

    #[test]
    fn h_polynomial_errors() {
        let n = IntPolynomial::new(vec![1, 0, 0, -1]);
        assert!(matches!(h_polynomial(&n, 6, 3), Err(Error::InexactDivision(3))));
        assert!(matches!(h_polynomial(&n, 6, 6), Err(Error::Internal(_))));
    }

    #[test]
    fn tuples_of_small_families() {
        let t = invariant_tuple(&cycle_graph(6).unwrap()).unwrap();
        assert_eq!(t.as_array(), [2, 2, 1, 5, 5]);
        let t = invariant_tuple(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(t.as_array(), [2, 2, 4, 5, 5]);
        let t = invariant_tuple(&star(5).unwrap()).unwrap();
        assert_eq!(t.as_array(), [0, 0, 0, 4, 4]);
    }

    #[test]
    fn a_invariant_and_codegree() {
        let c6 = invariant_tuple(&cycle_graph(6).unwrap()).unwrap();
        assert_eq!(a_invariant(&c6), -3);
        assert_eq!(codegree(&c6, 6), 4);
        let k33 = invariant_tuple(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(a_invariant(&k33), -3);
        assert_eq!(codegree(&k33, 6), 4);
        for n in 2..8 {
            let t = invariant_tuple(&star(n).unwrap()).unwrap();
            assert_eq!(a_invariant(&t), 1 - n as i64);
            assert_eq!(codegree(&t, n), n as i64);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(invariant_tuple(&cycle_graph(5).unwrap()), Err(Error::NotBipartite)));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(invariant_tuple(&two), Err(Error::Disconnected)));
        assert!(matches!(invariant_tuple(&Graph::new(1, []).unwrap()), Err(Error::EmptyEdgeSet)));
    }
}
