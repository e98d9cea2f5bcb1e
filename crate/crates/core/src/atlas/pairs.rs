use std::collections::BTreeSet;

/// The `(reg, pdim)` pairs realised by connected bipartite graphs on `n`
/// vertices: `(0, 0)` together with every `(r, p)` with `0 < r < floor(n/2)`
/// and `1 <= p <= r (n - 2 - r)`.
pub fn theoretical_pairs(n: usize) -> BTreeSet<(usize, usize)> {
    let mut set = BTreeSet::from([(0, 0)]);
    for r in 1..(n / 2).max(1) {
        for p in 1..=r * (n - 2 - r) {
            set.insert((r, p));
        }
    }
    set
}

/// `1 - f (f - 1) (2f - 3n + 5) / 6` with `f = floor(n/2)`, evaluated exactly.
pub fn cardinality_formula(n: usize) -> i64 {
    let f = (n / 2) as i128;
    let n = n as i128;
    let prod = f * (f - 1) * (2 * f - 3 * n + 5);
    debug_assert_eq!(prod % 6, 0);
    (1 - prod / 6) as i64
}

/// `1 + Σ_{r=1}^{floor(n/2)-1} r (n - 2 - r)`, the direct count of
/// [`theoretical_pairs`].
pub fn cardinality_sum(n: usize) -> i64 {
    let n = n as i64;
    1 + (1..(n / 2)).map(|r| r * (n - 2 - r)).sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sets() {
        assert_eq!(theoretical_pairs(2), BTreeSet::from([(0, 0)]));
        assert_eq!(theoretical_pairs(3), BTreeSet::from([(0, 0)]));
        assert_eq!(theoretical_pairs(4), BTreeSet::from([(0, 0), (1, 1)]));
        let eight = theoretical_pairs(8);
        assert_eq!(eight.len(), 23);
        assert_eq!(eight.iter().filter(|p| p.0 == 3).max(), Some(&(3, 9)));
        let nine = theoretical_pairs(9);
        assert_eq!(nine.len(), 29);
        assert_eq!(nine.iter().max_by_key(|p| (p.1, p.0)), Some(&(3, 12)));
    }

    #[test]
    fn formula_values() {
        assert_eq!(cardinality_formula(2), 1);
        assert_eq!(cardinality_formula(3), 1);
        assert_eq!(cardinality_formula(8), 23);
        assert_eq!(cardinality_formula(9), 29);
        for n in 2..=100 {
            assert_eq!(cardinality_formula(n), cardinality_sum(n));
            assert_eq!(cardinality_formula(n), theoretical_pairs(n).len() as i64);
        }
    }
}
