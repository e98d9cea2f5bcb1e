use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::hilbert::InvariantTuple;

/// A structural identity or inequality checked for every enumerated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// `reg <= mat(G) - 1`.
    RegBelowMatching,
    /// `mat(G) <= floor(n/2)`.
    MatchingBound,
    /// `reg < floor(n/2)`.
    RegBelowHalf,
    /// `dim = depth = n - 1`.
    DimDepth,
    /// `pdim = q - n + 1`.
    PdimFormula,
    /// `q <= (reg + 1)(n - reg - 1)`.
    EdgeBound,
    /// `G` is a forest exactly when `reg = 0`, exactly when `pdim = 0`.
    ForestEquivalence,
    /// The tuple has the shape `(r, r, p, n - 1, n - 1)`.
    TupleShape,
    /// `h(1) != 0`.
    HilbertSerre,
    /// Degrevlex and lex give the same h-polynomial.
    OrderIndependence,
    /// Deleting an edge and staying connected never raises `reg`.
    EdgeDeletionMonotone,
    /// Koszul-homology `(reg, pdim)` and Euler characteristic agree.
    BettiOracle,
    /// The invariant computation itself succeeded.
    Pipeline,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::RegBelowMatching => "reg_below_matching",
            Property::MatchingBound => "matching_bound",
            Property::RegBelowHalf => "reg_below_half",
            Property::DimDepth => "dim_depth",
            Property::PdimFormula => "pdim_formula",
            Property::EdgeBound => "edge_bound",
            Property::ForestEquivalence => "forest_equivalence",
            Property::TupleShape => "tuple_shape",
            Property::HilbertSerre => "hilbert_serre",
            Property::OrderIndependence => "order_independence",
            Property::EdgeDeletionMonotone => "edge_deletion_monotone",
            Property::BettiOracle => "betti_oracle",
            Property::Pipeline => "pipeline",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evaluates the tuple-level properties of `t` for `g` with matching number
/// `mat`.
pub fn property_sweep(g: &Graph, t: &InvariantTuple, mat: usize) -> Vec<(Property, bool)> {
    let n = g.num_vertices();
    let q = g.num_edges();
    let half = n / 2;
    let forest = g.is_forest();
    vec![
        (Property::RegBelowMatching, mat >= 1 && t.reg < mat),
        (Property::MatchingBound, mat <= half),
        (Property::RegBelowHalf, t.reg < half),
        (Property::DimDepth, t.dim == n - 1 && t.depth == t.dim),
        (Property::PdimFormula, t.pdim + n == q + 1),
        (Property::EdgeBound, t.reg + 1 < n && q <= (t.reg + 1) * (n - t.reg - 1)),
        (Property::ForestEquivalence, forest == (t.reg == 0) && forest == (t.pdim == 0)),
        (Property::TupleShape, t.reg == t.deg_h && t.depth == n - 1 && t.dim == n - 1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, matching_number, path_graph};
    use crate::hilbert::invariant_tuple;

    fn sweep(g: &Graph) -> Vec<(Property, bool)> {
        let t = invariant_tuple(g).unwrap();
        property_sweep(g, &t, matching_number(g).unwrap())
    }

    #[test]
    fn known_graphs_pass() {
        for g in [cycle_graph(6).unwrap(), complete_bipartite(4, 4).unwrap(), path_graph(7).unwrap()] {
            assert!(sweep(&g).iter().all(|&(_, ok)| ok), "{g:?}");
        }
    }

    #[test]
    fn k44_edge_bound_is_tight() {
        let g = complete_bipartite(4, 4).unwrap();
        let t = invariant_tuple(&g).unwrap();
        assert_eq!(t.reg, 3);
        assert_eq!(g.num_edges(), (t.reg + 1) * (8 - t.reg - 1));
    }

    #[test]
    fn violations_are_reported() {
        let g = cycle_graph(6).unwrap();
        let bad = InvariantTuple { reg: 3, deg_h: 2, pdim: 0, depth: 5, dim: 5 };
        let failed: Vec<Property> =
            property_sweep(&g, &bad, 3).into_iter().filter(|&(_, ok)| !ok).map(|(p, _)| p).collect();
        assert!(failed.contains(&Property::RegBelowMatching));
        assert!(failed.contains(&Property::RegBelowHalf));
        assert!(failed.contains(&Property::PdimFormula));
        assert!(failed.contains(&Property::TupleShape));
    }
}
