use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::reduce::{normal_form, normal_form_monomial};
use super::MonomialOrder;
use crate::toric::{Binomial, Monomial};

/// A reduced Gröbner basis of a binomial ideal.
///
/// Elements are oriented (`plus` is the leading monomial), no leading monomial
/// divides another, every trailing monomial is in normal form, and the list is
/// sorted by decreasing leading monomial. The reduced basis is unique, so two
/// runs on generating sets of the same ideal produce equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGB {
    order: MonomialOrder,
    elements: Vec<Binomial>,
}

#[derive(Serialize)]
struct GbDump<'a> {
    order: String,
    elements: Vec<String>,
    raw: &'a [Binomial],
}

impl ReducedGB {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(Binomial::lead)
    }

    pub fn reduce_monomial(&self, m: &Monomial) -> Monomial {
        normal_form_monomial(&self.elements, m)
    }

    /// Ideal membership: `b` reduces to zero.
    pub fn contains(&self, b: &Binomial) -> bool {
        normal_form(&self.order, &self.elements, b).is_none()
    }

    /// JSON dump for debugging.
    pub fn to_json(&self) -> String {
        let dump = GbDump {
            order: self.order.kind().to_string(),
            elements: self.elements.iter().map(ToString::to_string).collect(),
            raw: &self.elements,
        };
        serde_json::to_string_pretty(&dump).expect("GB serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm for homogeneous pure-difference binomials.
///
/// Pairs are processed by the normal strategy (smallest lcm degree first, ties
/// broken by the lcm's exponent vector), and input generators are fed in by
/// degree alongside them. Pairs with coprime leading monomials and pairs
/// covered by the chain criterion are skipped. Every intermediate polynomial is
/// a binomial, so no coefficient arithmetic is needed.
pub fn buchberger(order: &MonomialOrder, gens: &[Binomial]) -> ReducedGB {
    let mut pending_gens: Vec<Binomial> = gens.iter().map(|g| g.clone().oriented(order)).collect();
    pending_gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| order.cmp(b.lead(), a.lead()))
            .then_with(|| order.cmp(b.trail(), a.trail()))
    });
    pending_gens.dedup();
    let mut pending_gens = pending_gens.into_iter().peekable();

    let mut basis: Vec<Binomial> = Vec::new();
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    let mut open: HashSet<(usize, usize)> = HashSet::new();

    loop {
        let next_pair_degree = pairs.first().map(|p| p.degree);
        let take_gen = match (pending_gens.peek(), next_pair_degree) {
            (None, None) => break,
            (Some(g), Some(d)) => g.degree() <= d,
            (Some(_), None) => true,
            (None, Some(_)) => false,
        };
        let candidate = if take_gen {
            pending_gens.next().unwrap()
        } else {
            let key = pairs.pop_first().unwrap();
            open.remove(&(key.i, key.j));
            let (gi, gj) = (&basis[key.i], &basis[key.j]);
            if gi.lead().is_coprime(gj.lead()) || chain_criterion(&basis, &open, &key) {
                continue;
            }
            let a = key.lcm.replace_factor(gi.lead(), gi.trail());
            let b = key.lcm.replace_factor(gj.lead(), gj.trail());
            match Binomial::new(a, b) {
                Some(s) => s,
                None => continue,
            }
        };
        debug_assert!(candidate.is_homogeneous(), "inhomogeneous binomial {candidate}");
        let Some(h) = normal_form(order, &basis, &candidate) else {
            continue;
        };
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.lead().lcm(h.lead());
            pairs.insert(PairKey { degree: lcm.degree(), lcm, i, j: k });
            open.insert((i, k));
        }
        basis.push(h);
    }

    ReducedGB { order: order.clone(), elements: reduce_basis(order, basis) }
}

/// Buchberger's second criterion: some other leading monomial divides the
/// pair's lcm and both of its pairs with `i` and `j` are already settled.
fn chain_criterion(basis: &[Binomial], open: &HashSet<(usize, usize)>, key: &PairKey) -> bool {
    let ordered = |a: usize, b: usize| (a.min(b), a.max(b));
    basis.iter().enumerate().any(|(k, g)| {
        k != key.i
            && k != key.j
            && g.lead().divides(&key.lcm)
            && !open.contains(&ordered(key.i, k))
            && !open.contains(&ordered(key.j, k))
    })
}

/// Minimalises and interreduces a Gröbner basis, then sorts it.
fn reduce_basis(order: &MonomialOrder, basis: Vec<Binomial>) -> Vec<Binomial> {
    let mut minimal: Vec<Binomial> = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let leads_only = minimal.clone();
    let mut reduced: Vec<Binomial> = minimal
        .into_iter()
        .map(|g| {
            let trail = normal_form_monomial(&leads_only, g.trail());
            Binomial { plus: g.plus, minus: trail }
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(b.lead(), a.lead()));
    reduced
}
