use crate::error::{Error, Result};

/// Jackson's edge threshold for long cycles in bipartite graphs.
///
/// A bipartite graph with parts of sizes `a <= b` and strictly more than this
/// many edges contains a cycle of length at least `2m`. Requires
/// `2 <= m <= a <= b`. The two case formulas overlap at `a = 2m - 2`; there
/// the smaller value is returned.
pub fn jackson_min_edges(m: u64, a: u64, b: u64) -> Result<u64> {
    if !(2 <= m && m <= a && a <= b) {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= m <= a <= b, got (m, a, b) = ({m}, {a}, {b})"
        )));
    }
    let small = (a <= 2 * m - 2).then(|| a + (b - 1) * (m - 1));
    let large = (a >= 2 * m - 2).then(|| (a + b + 3 - 2 * m) * (m - 1));
    Ok(match (small, large) {
        (Some(s), Some(l)) => s.min(l),
        (Some(s), None) => s,
        (None, Some(l)) => l,
        (None, None) => unreachable!("one of the cases always applies"),
    })
}

/// Upper bound `(r+1)(n-r-1)` on the edge count of a connected bipartite graph
/// on `n` vertices whose toric ring has regularity `r`.
pub fn max_edges_for_reg(r: u64, n: u64) -> u64 {
    (r + 1) * n.saturating_sub(r + 1)
}
