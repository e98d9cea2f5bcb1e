use std::collections::HashMap;

use super::IntPolynomial;
use crate::groebner::MonomialIdeal;
use crate::toric::Monomial;

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^q` of `S / M`.
///
/// Pivot recursion on a variable `x`:
/// `N(M) = N(M + <x>) + t * N(M : x)`, memoised on the minimal generator set.
/// Linear generators are split off as factors `1 - t`, and an ideal whose
/// generators are pairwise coprime is a complete intersection with numerator
/// `prod (1 - t^deg g)`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPolynomial {
    let mut memo = HashMap::new();
    numerator(ideal.generators().to_vec(), &mut memo)
}

fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, IntPolynomial>) -> IntPolynomial {
    let (linear, rest): (Vec<Monomial>, Vec<Monomial>) = gens.into_iter().partition(|g| g.degree() == 1);
    let linear_factor = IntPolynomial::one_minus_t_to(linear.len());
    if rest.is_empty() {
        return linear_factor;
    }
    if pairwise_coprime(&rest) {
        let ci = rest
            .iter()
            .fold(IntPolynomial::one(), |acc, g| &acc * &IntPolynomial::one_minus_t_pow(g.degree() as usize));
        return &linear_factor * &ci;
    }
    if let Some(hit) = memo.get(&rest) {
        return &linear_factor * hit;
    }

    let pivot = pivot_variable(&rest);
    let num_vars = rest[0].num_vars();

    // M + <x>: generators divisible by x are absorbed.
    let mut plus: Vec<Monomial> = rest.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(num_vars, pivot));
    let plus = MonomialIdeal::new(num_vars, plus);

    // M : x
    let colon = MonomialIdeal::new(
        num_vars,
        rest.iter().map(|g| {
            let mut h = g.clone();
            if let Some(e) = h.exponents_mut().get_mut(pivot) {
                *e = e.saturating_sub(1);
            }
            h
        }),
    );

    let a = numerator(plus.generators().to_vec(), memo);
    let b = numerator(colon.generators().to_vec(), memo);
    let result = &a + &b.shift(1);
    memo.insert(rest, result.clone());
    &linear_factor * &result
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let mut used = vec![false; gens[0].num_vars()];
    for g in gens {
        for v in g.support() {
            if used[v] {
                return false;
            }
            used[v] = true;
        }
    }
    true
}

/// The variable occurring in the most generators (smallest index on ties).
fn pivot_variable(gens: &[Monomial]) -> usize {
    let mut counts = vec![0usize; gens[0].num_vars()];
    for g in gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let max = *counts.iter().max().unwrap();
    counts.iter().position(|&c| c == max).unwrap()
}

/// Krull dimension of `S / M`: the largest set of variables containing the
/// support of no generator, i.e. `q` minus a minimum transversal of the
/// generator supports.
pub fn krull_dimension(ideal: &MonomialIdeal) -> usize {
    let q = ideal.num_vars();
    let mut supports: Vec<Vec<usize>> = ideal.generators().iter().map(|g| g.support().collect()).collect();
    supports.sort_by_key(Vec::len);
    let mut search =
        Transversal { supports: &supports, chosen: vec![false; q], forbidden: vec![false; q], best: q };
    search.run(0);
    q - search.best
}

struct Transversal<'a> {
    supports: &'a [Vec<usize>],
    chosen: Vec<bool>,
    forbidden: Vec<bool>,
    best: usize,
}

impl Transversal<'_> {
    fn hit(&self, s: &[usize]) -> bool {
        s.iter().any(|&v| self.chosen[v])
    }

    /// Greedy count of pairwise disjoint unhit supports, a lower bound on the
    /// number of further variables needed.
    fn lower_bound(&self) -> usize {
        let mut used = vec![false; self.chosen.len()];
        let mut count = 0;
        for s in self.supports {
            if !self.hit(s) && s.iter().all(|&v| !used[v]) {
                count += 1;
                s.iter().for_each(|&v| used[v] = true);
            }
        }
        count
    }

    fn run(&mut self, size: usize) {
        if size >= self.best {
            return;
        }
        // Branch on the unhit support with the fewest still-allowed variables.
        let Some(target) = self
            .supports
            .iter()
            .filter(|s| !self.hit(s))
            .min_by_key(|s| s.iter().filter(|&&v| !self.forbidden[v]).count())
        else {
            self.best = size;
            return;
        };
        if size + self.lower_bound() >= self.best {
            return;
        }
        let options: Vec<usize> = target.iter().copied().filter(|&v| !self.forbidden[v]).collect();
        let mut newly_forbidden = Vec::new();
        for v in options {
            self.chosen[v] = true;
            self.run(size + 1);
            self.chosen[v] = false;
            // Later branches may assume v is not in the transversal.
            self.forbidden[v] = true;
            newly_forbidden.push(v);
        }
        for v in newly_forbidden {
            self.forbidden[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(q: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(q, gens.iter().map(|g| Monomial::from_vars(q, g.iter().map(|v| v - 1))))
    }

    #[test]
    fn free_ring_and_principal() {
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(6)), IntPolynomial::one());
        let c6 = ideal(6, &[&[1, 3, 5]]);
        assert_eq!(hilbert_numerator(&c6), IntPolynomial::new(vec![1, 0, 0, -1]));
        assert_eq!(krull_dimension(&MonomialIdeal::zero(6)), 6);
        assert_eq!(krull_dimension(&c6), 5);
    }

    #[test]
    fn overlapping_generators() {
        // <x1 x2, x2 x3> = x2 * <x1, x3> ∩ ...: HS numerator 1 - 2t^2 + t^3.
        let m = ideal(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(hilbert_numerator(&m), IntPolynomial::new(vec![1, 0, -2, 1]));
        assert_eq!(krull_dimension(&m), 2);
    }

    #[test]
    fn powers_and_linear() {
        let m = ideal(3, &[&[1, 1], &[2]]);
        assert_eq!(hilbert_numerator(&m), IntPolynomial::new(vec![1, -1, -1, 1]));
        assert_eq!(krull_dimension(&m), 1);
    }
}
