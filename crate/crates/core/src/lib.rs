//! Homological invariants of toric ideals of connected bipartite graphs.
//!
//! The pipeline runs graph → cycle binomials → reduced Gröbner basis →
//! initial ideal → Hilbert series, and reads off the tuple
//! `(reg, deg h, pdim, depth, dim)`. [`betti`] recomputes regularity and
//! projective dimension independently from Koszul homology, and [`atlas`]
//! enumerates connected bipartite graphs to check which `(reg, pdim)` pairs
//! occur on `n` vertices.

pub mod atlas;
pub mod betti;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod hilbert;
pub mod toric;

pub use error::{Error, Result};
pub use graph::{Bipartition, CanonicalCode, Cycle, Graph};
pub use groebner::{MonomialIdeal, MonomialOrder, OrderKind, ReducedGB};
pub use hilbert::{HilbertData, IntPolynomial, InvariantReport, InvariantTuple};
pub use toric::{Binomial, Monomial, ToricPresentation};
