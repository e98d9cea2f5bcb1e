use std::cmp::Ordering;

use super::MonomialOrder;
use crate::toric::{Binomial, Monomial};

/// Index of the first basis element whose leading monomial divides `m`.
#[inline]
pub(crate) fn first_reducer(basis: &[Binomial], m: &Monomial) -> Option<usize> {
    basis.iter().position(|g| g.lead().divides(m))
}

/// Fully reduces a monomial: while some leading monomial divides it, swap that
/// factor for the element's trailing monomial, always using the first
/// applicable basis element.
///
/// Basis elements must be oriented (`plus` is the leading term). Because all
/// coefficients are `±1`, the normal form of a monomial is again a monomial.
pub fn normal_form_monomial(basis: &[Binomial], m: &Monomial) -> Monomial {
    let mut cur = m.clone();
    while let Some(k) = first_reducer(basis, &cur) {
        cur = cur.replace_factor(basis[k].lead(), basis[k].trail());
    }
    cur
}

/// Reduces a binomial to normal form; `None` means it reduced to zero.
///
/// The larger reducible term is rewritten first, one step at a time. The
/// result stays a binomial throughout and is returned oriented under `order`.
pub fn normal_form(order: &MonomialOrder, basis: &[Binomial], target: &Binomial) -> Option<Binomial> {
    let (mut a, mut b) = (target.plus.clone(), target.minus.clone());
    loop {
        if a == b {
            return None;
        }
        if order.cmp(&a, &b) == Ordering::Less {
            std::mem::swap(&mut a, &mut b);
        }
        if let Some(k) = first_reducer(basis, &a) {
            a = a.replace_factor(basis[k].lead(), basis[k].trail());
        } else if let Some(k) = first_reducer(basis, &b) {
            b = b.replace_factor(basis[k].lead(), basis[k].trail());
        } else {
            return Some(Binomial { plus: a, minus: b });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(q: usize, vars: &[usize]) -> Monomial {
        Monomial::from_vars(q, vars.iter().map(|v| v - 1))
    }

    fn c6_basis() -> Vec<Binomial> {
        vec![Binomial::new(mono(6, &[1, 3, 5]), mono(6, &[2, 4, 6])).unwrap()]
    }

    #[test]
    fn one_step_and_irreducible() {
        let basis = c6_basis();
        assert_eq!(normal_form_monomial(&basis, &mono(6, &[1, 3, 5])), mono(6, &[2, 4, 6]));
        let m = mono(6, &[1, 2, 4, 6]);
        assert_eq!(normal_form_monomial(&basis, &m), m);
    }

    #[test]
    fn basis_elements_reduce_to_zero() {
        let basis = c6_basis();
        let order = MonomialOrder::default();
        assert_eq!(normal_form(&order, &basis, &basis[0]), None);
    }

    #[test]
    fn binomial_result_is_oriented() {
        let basis = c6_basis();
        let order = MonomialOrder::default();
        // e1^2 e3 e5 - e1 e2^3 reduces its leading term to e1 e2 e4 e6.
        let t = Binomial::new(mono(6, &[1, 1, 3, 5]), mono(6, &[1, 2, 2, 2])).unwrap();
        let r = normal_form(&order, &basis, &t).unwrap();
        assert_eq!(order.cmp(&r.plus, &r.minus), Ordering::Greater);
        let terms = [r.plus.clone(), r.minus.clone()];
        assert!(terms.contains(&mono(6, &[1, 2, 4, 6])));
        assert!(terms.contains(&mono(6, &[1, 2, 2, 2])));
    }
}
