//! Canonical forms for isomorphism rejection.
//!
//! A connected bipartite graph has a unique bipartition up to swapping the
//! parts, so it is encoded by its biadjacency matrix, minimised over row and
//! column permutations (and transposition when the parts have equal size).
//! Column permutations are free: for a fixed row order, sorting the column
//! bit masks gives the minimum, so only the `a!` row orders of the smaller
//! part are searched. Every other graph falls back to minimising the
//! adjacency bit string over all `n!` vertex orders. Both searches are
//! factorial; the enumeration only ever runs them for `n <= 10`.

use std::fmt;

use itertools::Itertools;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(CanonicalCode)
    }

    /// Code of a biadjacency matrix already in canonical form.
    pub(crate) fn from_canonical_matrix(rows: usize, cols: &[u32]) -> Self {
        let width = rows.div_ceil(8);
        let mut bytes = Vec::with_capacity(3 + width * cols.len());
        bytes.push(b'B');
        bytes.push(rows as u8);
        bytes.push(cols.len() as u8);
        for &c in cols {
            bytes.extend_from_slice(&c.to_le_bytes()[..width]);
        }
        CanonicalCode(bytes)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Minimises a `rows x cols.len()` biadjacency matrix, given as one row bit
/// mask per column, over row and column permutations.
///
/// With `allow_transpose` and a square matrix the transpose is considered too.
/// Returns the minimal sorted column masks and the number of rows.
pub fn canonical_matrix(rows: usize, cols: &[u32], allow_transpose: bool) -> (usize, Vec<u32>) {
    assert!(rows <= 32, "biadjacency canonical form supports at most 32 rows");
    let mut best = min_over_row_orders(rows, cols);
    if allow_transpose && rows == cols.len() {
        let t = transpose(rows, cols);
        let alt = min_over_row_orders(rows, &t);
        if alt < best {
            best = alt;
        }
    }
    (rows, best)
}

fn transpose(rows: usize, cols: &[u32]) -> Vec<u32> {
    (0..rows)
        .map(|i| {
            cols.iter().enumerate().filter(|&(_, &c)| c >> i & 1 == 1).fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

fn min_over_row_orders(rows: usize, cols: &[u32]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut candidate = vec![0u32; cols.len()];
    let use_table = rows <= 12;
    let mut table = vec![0u32; if use_table { 1 << rows } else { 0 }];
    for perm in (0..rows).permutations(rows) {
        let map =
            |mask: u32| (0..rows).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << perm[i]);
        if use_table {
            for (mask, slot) in table.iter_mut().enumerate() {
                *slot = map(mask as u32);
            }
        }
        for (dst, &c) in candidate.iter_mut().zip(cols) {
            *dst = if use_table { table[c as usize] } else { map(c) };
        }
        candidate.sort_unstable();
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate.clone());
        }
    }
    best.unwrap_or_default()
}

/// The graph with part A = `0..rows` and one B-vertex per column, edges
/// ordered by `(row, column)`.
pub(crate) fn bipartite_from_columns(rows: usize, cols: &[u32]) -> Graph {
    let edges = (0..rows).flat_map(|i| {
        cols.iter().enumerate().filter(move |&(_, &c)| c >> i & 1 == 1).map(move |(j, _)| (i, rows + j))
    });
    Graph::new(rows + cols.len(), edges).expect("biadjacency matrix yields a simple graph")
}

/// A byte string that is equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalCode {
    if g.num_vertices() >= 1 && g.is_connected() {
        if let Ok(bp) = g.bipartition() {
            return bipartite_code(g, bp.part_a(), bp.part_b());
        }
    }
    general_code(g)
}

fn bipartite_code(g: &Graph, part_a: &[usize], part_b: &[usize]) -> CanonicalCode {
    let (rows, cols) = if part_a.len() <= part_b.len() { (part_a, part_b) } else { (part_b, part_a) };
    let mut row_of = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in rows.iter().enumerate() {
        row_of[v] = i;
    }
    let masks: Vec<u32> =
        cols.iter().map(|&w| g.neighbors(w).fold(0u32, |acc, v| acc | 1 << row_of[v])).collect();
    let (r, canon) = canonical_matrix(rows.len(), &masks, true);
    CanonicalCode::from_canonical_matrix(r, &canon)
}

fn general_code(g: &Graph) -> CanonicalCode {
    let n = g.num_vertices();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut best: Option<Vec<u8>> = None;
    let mut bits = vec![0u8; pairs.div_ceil(8)];
    for perm in (0..n).permutations(n) {
        bits.iter_mut().for_each(|b| *b = 0);
        for &(u, v) in g.edges() {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            // Row-major index of (a, b) in the strict upper triangle.
            let k = a * n - a * (a + 1) / 2 + (b - a - 1);
            bits[k / 8] |= 1 << (7 - k % 8);
        }
        if best.as_ref().map_or(true, |b| bits < *b) {
            best = Some(bits.clone());
        }
    }
    let mut code = vec![b'G', n as u8];
    code.extend(best.unwrap_or_default());
    CanonicalCode(code)
}
