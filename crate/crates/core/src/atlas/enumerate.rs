use crate::error::{Error, Result};
use crate::graph::{bipartite_from_columns, canonical_matrix, CanonicalCode, Graph};

/// Largest vertex count enumerated without an explicit override.
pub const ENUMERATION_GUARD: usize = 10;

/// One isomorphism class of connected bipartite graphs.
#[derive(Debug, Clone)]
pub struct GraphClass {
    pub code: CanonicalCode,
    pub graph: Graph,
}

pub(crate) fn check_guard(n: usize, allow_large: bool) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 2 vertices, got {n}")));
    }
    if n > ENUMERATION_GUARD && !allow_large {
        return Err(Error::SizeGuardExceeded(format!(
            "n = {n} exceeds the enumeration limit {ENUMERATION_GUARD}; pass the override to run it anyway"
        )));
    }
    if n > 32 {
        return Err(Error::SizeGuardExceeded(format!("n = {n}: biadjacency masks hold at most 32 rows")));
    }
    Ok(())
}

/// One representative per isomorphism class of connected bipartite graphs on
/// `n` vertices.
///
/// For each split `a + b = n` with `a <= b`, walks the nondecreasing sequences
/// of `b` nonzero column masks over `a` rows and keeps a sequence exactly when
/// it is connected and already equal to its own canonical matrix. Every class
/// has a unique canonical matrix, so no deduplication pass is needed. A
/// representative has part A = `0..a` and part B = `a..n`.
pub fn enumerate_connected_bipartite(n: usize, allow_large: bool) -> Result<Vec<GraphClass>> {
    check_guard(n, allow_large)?;
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        let mut cols = Vec::with_capacity(b);
        extend(a, b, 1, &mut cols, &mut |cols| {
            if !connected(a, cols) {
                return;
            }
            let (_, canon) = canonical_matrix(a, cols, a == b);
            if canon == cols {
                out.push(GraphClass {
                    code: CanonicalCode::from_canonical_matrix(a, cols),
                    graph: bipartite_from_columns(a, cols),
                });
            }
        });
    }
    Ok(out)
}

fn extend(rows: usize, len: usize, min: u32, cols: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if cols.len() == len {
        visit(cols);
        return;
    }
    for mask in min..(1u32 << rows) {
        cols.push(mask);
        extend(rows, len, mask, cols, visit);
        cols.pop();
    }
}

/// Whether the bipartite graph with these column masks is connected and has
/// no isolated row.
fn connected(rows: usize, cols: &[u32]) -> bool {
    let full = (1u32 << rows) - 1;
    if cols.iter().fold(0, |acc, c| acc | c) != full {
        return false;
    }
    let mut reached = cols[0];
    loop {
        let next = cols.iter().filter(|&&c| c & reached != 0).fold(reached, |acc, c| acc | c);
        if next == reached {
            return reached == full;
        }
        reached = next;
    }
}
