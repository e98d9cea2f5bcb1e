//! The toric ideal of a bipartite graph, presented by its cycle binomials.
//!
//! Edge `e_i = {u, v}` maps to the vertex monomial `u*v`; the toric ideal is
//! the kernel of that map. For bipartite graphs it is generated by one binomial
//! per even cycle, the product of the odd-position edges minus the product of
//! the even-position edges.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, Cycle, Graph};
use crate::groebner::MonomialOrder;

/// Exponent vector over the edge variables `e_1..e_q` (stored 0-based).
///
/// The derived `Ord` is plain vector order, used only for canonical sorting;
/// use [`MonomialOrder`] to compare monomials as terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut m = Self::one(num_vars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// Product of the given variables (repeats allowed).
    pub fn from_vars(num_vars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(num_vars);
        for v in vars {
            m.0[v] += 1;
        }
        m
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a.checked_sub(b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    /// `self / other * replacement`; caller guarantees `other | self`.
    pub(crate) fn replace_factor(&self, other: &Monomial, replacement: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).zip(&replacement.0).map(|((&a, &b), &c)| a - b + c).collect())
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl fmt::Display for Monomial {
    /// `e1*e3^2`, or `1` for the constant monomial. Variables print 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "e{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// The pure difference binomial `plus - minus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    /// `None` when the two terms cancel.
    pub fn new(plus: Monomial, minus: Monomial) -> Option<Self> {
        debug_assert_eq!(plus.num_vars(), minus.num_vars());
        (plus != minus).then_some(Self { plus, minus })
    }

    pub fn num_vars(&self) -> usize {
        self.plus.num_vars()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    /// Degree of the leading term.
    pub fn degree(&self) -> u32 {
        self.plus.degree()
    }

    /// Swaps terms if needed so that `plus` is the larger one under `order`.
    /// The result equals `self` up to sign, which is irrelevant in an ideal.
    pub fn oriented(mut self, order: &MonomialOrder) -> Self {
        if order.cmp(&self.plus, &self.minus) == Ordering::Less {
            std::mem::swap(&mut self.plus, &mut self.minus);
        }
        self
    }

    pub fn lead(&self) -> &Monomial {
        &self.plus
    }

    pub fn trail(&self) -> &Monomial {
        &self.minus
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// `f_Γ` for an even cycle: odd-position edges minus even-position edges,
/// oriented so that `plus` is the degrevlex-larger term.
pub fn cycle_binomial(g: &Graph, cycle: &Cycle) -> Result<Binomial> {
    let m = cycle.len();
    if m % 2 == 1 {
        return Err(Error::OddCycle(m));
    }
    let q = g.num_edges();
    let edges = cycle.edge_indices();
    let odd = Monomial::from_vars(q, edges.iter().step_by(2).copied());
    let even = Monomial::from_vars(q, edges.iter().skip(1).step_by(2).copied());
    let b =
        Binomial::new(odd, even).ok_or_else(|| Error::Internal("cycle binomial with equal terms".into()))?;
    Ok(b.oriented(&MonomialOrder::default()))
}

/// A graph together with a generating set of its toric ideal.
#[derive(Debug, Clone)]
pub struct ToricPresentation {
    pub graph: Graph,
    pub generators: Vec<Binomial>,
}

/// One cycle binomial per even cycle. Forests give the zero ideal (no generators).
pub fn toric_generators(g: &Graph) -> Result<ToricPresentation> {
    if g.num_edges() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    g.bipartition()?;
    let generators = enumerate_cycles(g).iter().map(|c| cycle_binomial(g, c)).collect::<Result<Vec<_>>>()?;
    Ok(ToricPresentation { graph: g.clone(), generators })
}

/// Exponent vector of the image of `m` in the vertex variables.
pub fn vertex_degree_vector(g: &Graph, m: &Monomial) -> Vec<u32> {
    let mut out = vec![0; g.num_vertices()];
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            let (u, v) = g.edge(i);
            out[u] += e;
            out[v] += e;
        }
    }
    out
}

/// Whether `b` lies in the toric ideal of `g`, i.e. both terms map to the
/// same vertex monomial.
pub fn validate_kernel_membership(g: &Graph, b: &Binomial) -> bool {
    b.num_vars() == g.num_edges() && vertex_degree_vector(g, &b.plus) == vertex_degree_vector(g, &b.minus)
}
