//! Monomial orders, binomial reduction, Buchberger's algorithm and initial ideals.

mod buchberger;
mod order;
mod reduce;

pub use buchberger::{buchberger, ReducedGB};
pub use order::{MonomialOrder, OrderKind};
pub use reduce::{normal_form, normal_form_monomial};

use crate::toric::Monomial;

/// A monomial ideal given by its minimal generators.
///
/// Generators form an antichain under divisibility and are sorted by exponent
/// vector, so equal ideals compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only the minimal elements of `gens`.
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(Monomial::degree);
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        Self { num_vars, gens: minimal }
    }

    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, gens: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

/// The ideal of leading monomials of a reduced Gröbner basis.
pub fn initial_ideal(gb: &ReducedGB) -> MonomialIdeal {
    let num_vars = gb.elements().first().map_or(0, |b| b.num_vars());
    MonomialIdeal::new(num_vars, gb.leading_monomials().cloned())
}

/// The initial ideal of the toric ideal of `g`, keeping the variable count even
/// when the ideal is zero.
pub(crate) fn initial_ideal_in(num_vars: usize, gb: &ReducedGB) -> MonomialIdeal {
    MonomialIdeal::new(num_vars, gb.leading_monomials().cloned())
}
