//! Graded Betti numbers of a toric ring from Koszul homology.
//!
//! `β_{i,j}(K[G])` is the dimension of the degree-`j` homology at step `i` of
//! the Koszul complex on `e_1, …, e_q` tensored with `K[G] = S / I_G`. The
//! complex is graded by the vertex-degree vector in `Z^n`, and every fine
//! graded piece of `K[G]` has dimension at most one, so each boundary map
//! splits into small blocks whose ranks are computed exactly.

mod rank;

pub use rank::rank_exact;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_internal, Error, Result};
use crate::graph::Graph;
use crate::groebner::{normal_form_monomial, MonomialOrder, ReducedGB};
use crate::hilbert::{require_connected_bipartite, toric_groebner_basis, IntPolynomial};
use crate::toric::Monomial;

/// Largest Koszul chain space, `C(q,i) * |std_{j-i}|`, the oracle will build.
pub const KOSZUL_SIZE_GUARD: u128 = 2_000_000;

/// Degree-`d` monomials in `num_vars` variables divisible by no leading
/// monomial of `gb`, in lexicographic order of exponent vectors (descending).
pub fn standard_monomials(gb: &ReducedGB, num_vars: usize, d: u32) -> Vec<Monomial> {
    let leads: Vec<&Monomial> = gb.leading_monomials().collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    fill(&leads, &mut exps, 0, d, &mut out);
    out
}

fn fill(leads: &[&Monomial], exps: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Monomial>) {
    // Exponents only grow along a branch, so divisibility prunes it for good.
    if in_ideal(leads, exps) {
        return;
    }
    let Some(last) = exps.len().checked_sub(1) else {
        if left == 0 {
            out.push(Monomial::from_exponents(Vec::new()));
        }
        return;
    };
    if var == last {
        exps[last] = left;
        if !in_ideal(leads, exps) {
            out.push(Monomial::from_exponents(exps.clone()));
        }
        exps[last] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[var] = e;
        fill(leads, exps, var + 1, left - e, out);
    }
    exps[var] = 0;
}

fn in_ideal(leads: &[&Monomial], exps: &[u32]) -> bool {
    leads.iter().any(|l| l.exponents().iter().zip(exps).all(|(a, b)| a <= b))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Koszul complex data for one graph: its reduced Gröbner basis and the
/// standard monomials of each degree, computed on demand.
pub struct KoszulOracle {
    graph: Graph,
    gb: ReducedGB,
    std: Vec<Vec<Monomial>>,
}

/// A Koszul basis element `e_F ⊗ m`, with `F` a set of edges as a bitmask.
type Cell = (u64, Monomial);

impl KoszulOracle {
    pub fn new(g: &Graph) -> Result<Self> {
        require_connected_bipartite(g)?;
        if g.num_edges() > 64 {
            return Err(Error::SizeGuardExceeded(format!(
                "{} edges, the Koszul oracle handles at most 64",
                g.num_edges()
            )));
        }
        let gb = toric_groebner_basis(g, &MonomialOrder::default())?;
        Ok(Self { graph: g.clone(), gb, std: Vec::new() })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn groebner_basis(&self) -> &ReducedGB {
        &self.gb
    }

    /// Makes standard monomials of degrees `0..=d` available.
    pub fn prepare(&mut self, d: usize) {
        let q = self.graph.num_edges();
        while self.std.len() <= d {
            let next = standard_monomials(&self.gb, q, self.std.len() as u32);
            self.std.push(next);
        }
    }

    fn standard(&self, d: usize) -> &[Monomial] {
        &self.std[d]
    }

    fn check_size(&self, i: usize, s: usize) -> Result<()> {
        let size = binomial(self.graph.num_edges(), i) * self.standard(s).len() as u128;
        if size > KOSZUL_SIZE_GUARD {
            return Err(Error::SizeGuardExceeded(format!(
                "Koszul space K_{i} in internal degree {s} has {size} basis elements, limit {KOSZUL_SIZE_GUARD}"
            )));
        }
        Ok(())
    }

    fn basis(&self, i: usize, s: usize) -> Vec<Cell> {
        let q = self.graph.num_edges();
        let std = self.standard(s);
        let mut out = Vec::with_capacity(binomial(q, i) as usize * std.len());
        for mask in subsets(q, i) {
            out.extend(std.iter().map(|m| (mask, m.clone())));
        }
        out
    }

    fn multidegree(&self, (mask, m): &Cell) -> Vec<u32> {
        let mut deg = vec![0u32; self.graph.num_vertices()];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let mult = m.exponent(e) + ((mask >> e) & 1) as u32;
            deg[u] += mult;
            deg[v] += mult;
        }
        deg
    }

    /// `d(e_F ⊗ m) = Σ_k (-1)^k e_{F \ f_k} ⊗ NF(x_{f_k} m)` with `F` ascending.
    fn boundary(&self, (mask, m): &Cell) -> Vec<(Cell, i64)> {
        let q = self.graph.num_edges();
        let mut out = Vec::new();
        let mut bits = *mask;
        let mut k = 0;
        while bits != 0 {
            let f = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let product = m.mul(&Monomial::var(q, f));
            let target = normal_form_monomial(self.gb.elements(), &product);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            out.push(((mask & !(1u64 << f), target), sign));
            k += 1;
        }
        out
    }

    /// Rank of the boundary map from `sources` into `targets`.
    fn block_rank(&self, sources: &[&Cell], targets: &[&Cell]) -> Result<usize> {
        if sources.is_empty() || targets.is_empty() {
            return Ok(0);
        }
        let index: HashMap<&Cell, usize> = targets.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut rows = Vec::with_capacity(sources.len());
        for src in sources {
            let mut row = vec![0i64; targets.len()];
            for (cell, sign) in self.boundary(src) {
                let Some(&col) = index.get(&cell) else {
                    return Err(Error::Internal(format!(
                        "Koszul boundary left the standard basis at edge set {:#b}",
                        cell.0
                    )));
                };
                row[col] += sign;
            }
            rows.push(row);
        }
        rank_exact(&rows)
    }

    /// `β_{i,j}`. Requires [`prepare`](Self::prepare) up to degree `j - i + 1`.
    pub fn homology_dim(&self, i: usize, j: usize) -> Result<u64> {
        let q = self.graph.num_edges();
        if j < i || i > q {
            return Ok(0);
        }
        let s = j - i;
        ensure_internal!(self.std.len() > s + 1, "standard monomials not prepared to degree {}", s + 1);
        self.check_size(i, s)?;
        let mid = self.basis(i, s);
        if mid.is_empty() {
            return Ok(0);
        }
        let low = if i >= 1 {
            self.check_size(i - 1, s + 1)?;
            self.basis(i - 1, s + 1)
        } else {
            Vec::new()
        };
        let high = if i < q && s >= 1 {
            self.check_size(i + 1, s - 1)?;
            self.basis(i + 1, s - 1)
        } else {
            Vec::new()
        };

        let group = |cells: &[Cell]| {
            let mut g: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
            for (k, c) in cells.iter().enumerate() {
                g.entry(self.multidegree(c)).or_default().push(k);
            }
            g
        };
        let low_groups = group(&low);
        let high_groups = group(&high);

        let mut total = 0u64;
        for (deg, members) in group(&mid) {
            let mid_cells: Vec<&Cell> = members.iter().map(|&k| &mid[k]).collect();
            let low_cells: Vec<&Cell> =
                low_groups.get(&deg).map_or_else(Vec::new, |v| v.iter().map(|&k| &low[k]).collect());
            let high_cells: Vec<&Cell> =
                high_groups.get(&deg).map_or_else(Vec::new, |v| v.iter().map(|&k| &high[k]).collect());
            let out_rank = self.block_rank(&mid_cells, &low_cells)?;
            let in_rank = self.block_rank(&high_cells, &mid_cells)?;
            ensure_internal!(
                out_rank + in_rank <= mid_cells.len(),
                "Koszul block ranks {out_rank} + {in_rank} exceed dimension {}",
                mid_cells.len()
            );
            total += (mid_cells.len() - out_rank - in_rank) as u64;
        }
        Ok(total)
    }
}

/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
fn subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if k == 0 {
        0
    } else if k > n {
        u64::MAX
    } else {
        u64::MAX >> (64 - k)
    };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            match r {
                Some(r) if r <= limit && r != 0 => Some((((r ^ cur) >> 2) / c) | r),
                _ => None,
            }
        };
        Some(cur)
    })
}

/// `β_{i,j}(K[G])` for a single cell.
pub fn koszul_homology_dim(g: &Graph, i: usize, j: usize) -> Result<u64> {
    let mut oracle = KoszulOracle::new(g)?;
    oracle.prepare(j.saturating_sub(i) + 1);
    oracle.homology_dim(i, j)
}

/// Graded Betti numbers over a rectangle of cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    i_max: usize,
    j_max: usize,
    guard_clean: bool,
}

impl BettiTable {
    /// Builds a table from its nonzero entries; zero values are dropped.
    pub fn from_entries(
        entries: impl IntoIterator<Item = ((usize, usize), u64)>,
        i_max: usize,
        j_max: usize,
    ) -> Self {
        let entries = entries.into_iter().filter(|&(_, v)| v != 0).collect();
        Self { entries, i_max, j_max, guard_clean: true }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn j_max(&self) -> usize {
        self.j_max
    }

    /// Whether the row and column just past the bounds were computed and are zero.
    pub fn guard_clean(&self) -> bool {
        self.guard_clean
    }

    /// `Σ_{i,j} (-1)^i β_{i,j} t^j`.
    pub fn euler_polynomial(&self) -> IntPolynomial {
        let len = self.entries.keys().map(|&(_, j)| j + 1).max().unwrap_or(0);
        let mut c = vec![0i64; len];
        for (&(i, j), &b) in &self.entries {
            let b = b as i64;
            c[j] += if i % 2 == 0 { b } else { -b };
        }
        IntPolynomial::new(c)
    }

    pub fn to_json(&self) -> String {
        let (reg, pdim) = invariants_from_betti(self);
        let json = BettiJson {
            entries: self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect(),
            i_max: self.i_max,
            j_max: self.j_max,
            guard_clean: self.guard_clean,
            reg,
            pdim,
        };
        serde_json::to_string_pretty(&json).expect("Betti table serialises")
    }
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    entries: Vec<BettiEntry>,
    i_max: usize,
    j_max: usize,
    guard_clean: bool,
    reg: usize,
    pdim: usize,
}

impl fmt::Display for BettiTable {
    /// Rows are indexed by `j - i`, columns by `i`, zeros print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (reg, pdim) = invariants_from_betti(self);
        let cols = 0..=pdim;
        let totals: Vec<u64> = cols
            .clone()
            .map(|i| self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum())
            .collect();
        let cell = |i: usize, d: usize| match self.get(i, i + d) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let widths: Vec<usize> = cols
            .clone()
            .map(|i| {
                let body = (0..=reg).map(|d| cell(i, d).len()).max().unwrap_or(1);
                body.max(totals[i].to_string().len()).max(i.to_string().len())
            })
            .collect();
        let label = "total:".len().max(format!("{reg}:").len());
        write!(f, "{:>label$}", "")?;
        for i in cols.clone() {
            write!(f, " {:>w$}", i, w = widths[i])?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in cols.clone() {
            write!(f, " {:>w$}", totals[i], w = widths[i])?;
        }
        for d in 0..=reg {
            writeln!(f)?;
            write!(f, "{:>label$}", format!("{d}:"))?;
            for i in cols.clone() {
                write!(f, " {:>w$}", cell(i, d), w = widths[i])?;
            }
        }
        Ok(())
    }
}

/// Betti table of `K[G]` for `0 <= i <= pdim` and `i <= j <= i + reg`, plus
/// one guard row and column beyond those bounds, which must vanish for a
/// Cohen–Macaulay ring of that regularity and projective dimension.
pub fn betti_table(g: &Graph, reg: usize, pdim: usize) -> Result<BettiTable> {
    let mut oracle = KoszulOracle::new(g)?;
    oracle.prepare(reg + 2);
    let cells: Vec<(usize, usize)> =
        (0..=pdim + 1).flat_map(|i| (i..=i + reg + 1).map(move |j| (i, j))).collect();
    let values = cells
        .par_iter()
        .map(|&(i, j)| oracle.homology_dim(i, j).map(|b| ((i, j), b)))
        .collect::<Result<Vec<_>>>()?;
    let guard_clean = values.iter().all(|&((i, j), b)| b == 0 || (i <= pdim && j - i <= reg));
    let mut table = BettiTable::from_entries(values, pdim, pdim + reg);
    table.guard_clean = guard_clean;
    Ok(table)
}

/// `(reg, pdim)`: the largest `j - i` and the largest `i` over nonzero entries.
pub fn invariants_from_betti(t: &BettiTable) -> (usize, usize) {
    let reg = t.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
    let pdim = t.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
    (reg, pdim)
}
