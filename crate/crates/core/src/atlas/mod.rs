//! Exhaustive enumeration of connected bipartite graphs on `n` vertices and
//! verification of the realised `(reg, pdim)` pairs and structural properties.

mod cache;
mod enumerate;
mod pairs;
mod properties;

pub use cache::{cache_load, cache_store, default_cache_dir, CacheLoad, CACHE_ENV};
pub use enumerate::{enumerate_connected_bipartite, GraphClass, ENUMERATION_GUARD};
pub use pairs::{cardinality_formula, cardinality_sum, theoretical_pairs};
pub use properties::{property_sweep, Property};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, invariants_from_betti};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, matching_number, Graph, GraphJson};
use crate::groebner::MonomialOrder;
use crate::hilbert::{analyze_unchecked, IntPolynomial, InvariantTuple};

/// Computed invariants of one isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRecord {
    /// Hex canonical code.
    pub code: String,
    pub n: usize,
    pub q: usize,
    pub edges: Vec<[usize; 2]>,
    pub tuple: InvariantTuple,
    pub h_poly: IntPolynomial,
    pub matching: usize,
    /// Wall time of the invariant computation.
    pub micros: u64,
}

impl AtlasRecord {
    /// Runs the degrevlex pipeline on `class`.
    pub fn compute(class: &GraphClass) -> Result<Self> {
        let g = &class.graph;
        let start = Instant::now();
        let analysis = analyze_unchecked(g, &MonomialOrder::default())?;
        let micros = start.elapsed().as_micros() as u64;
        Ok(Self {
            code: class.code.to_hex(),
            n: g.num_vertices(),
            q: g.num_edges(),
            edges: GraphJson::from(g).edges,
            tuple: analysis.tuple,
            h_poly: analysis.hilbert.h_poly,
            matching: matching_number(g)?,
            micros,
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.tuple.reg, self.tuple.pdim)
    }
}

/// Knobs for [`verify`] and [`atlas_records`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Recompute every graph under lex and compare h-polynomials.
    pub lex_check: bool,
    /// Check that connected single-edge deletions never raise `reg`.
    pub monotonicity: bool,
    /// Run the Koszul oracle on graphs with at most this many edges.
    pub betti_max_edges: Option<usize>,
    /// Lift the enumeration guard.
    pub allow_large: bool,
    /// Read and extend the record cache in this directory.
    pub cache_dir: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            lex_check: true,
            monotonicity: true,
            betti_max_edges: None,
            allow_large: false,
            cache_dir: None,
        }
    }
}

/// A property that failed on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub code: String,
    pub edges: Vec<[usize; 2]>,
    pub property: Property,
    pub detail: String,
}

/// Pass count of one property over a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCount {
    pub passed: usize,
    pub checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub class_count: usize,
    pub computed: BTreeSet<(usize, usize)>,
    pub theoretical: BTreeSet<(usize, usize)>,
    /// `computed == theoretical`.
    pub equal: bool,
    pub cardinality_formula: i64,
    pub properties: BTreeMap<Property, PropertyCount>,
    pub failures: Vec<Counterexample>,
    pub cache_hits: usize,
    pub corrupted_cache_lines: Vec<usize>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// Pairs match, the count matches the closed form, and nothing failed.
    pub fn success(&self) -> bool {
        self.equal && self.computed.len() as i64 == self.cardinality_formula && self.failures.is_empty()
    }

    /// `n=8: 182 classes, 23 pairs, MATCH`.
    pub fn summary(&self) -> String {
        let verdict = if self.success() { "MATCH" } else { "MISMATCH" };
        let mut s =
            format!("n={}: {} classes, {} pairs, {verdict}", self.n, self.class_count, self.computed.len());
        if !self.failures.is_empty() {
            s.push_str(&format!(" ({} counterexamples)", self.failures.len()));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Records and enumeration for `n`.
pub struct AtlasRun {
    pub classes: Vec<GraphClass>,
    /// Same order as `classes`.
    pub records: Vec<Result<AtlasRecord>>,
    pub cache_hits: usize,
    pub corrupted_cache_lines: Vec<usize>,
}

/// Enumerates the classes for `n` and computes (or loads) their records in
/// parallel. New records are appended to the cache afterwards.
pub fn atlas_records(n: usize, opts: &VerifyOptions) -> Result<AtlasRun> {
    let classes = enumerate_connected_bipartite(n, opts.allow_large)?;
    let loaded = match &opts.cache_dir {
        Some(dir) => cache_load(dir, n)?,
        None => CacheLoad::default(),
    };
    let results: Vec<(Result<AtlasRecord>, bool)> = classes
        .par_iter()
        .map(|class| match loaded.records.get(&class.code.to_hex()) {
            Some(rec) if rec.graph().is_ok_and(|g| g == class.graph) => (Ok(rec.clone()), true),
            _ => (AtlasRecord::compute(class), false),
        })
        .collect();
    let cache_hits = results.iter().filter(|r| r.1).count();
    if let Some(dir) = &opts.cache_dir {
        cache_store(dir, results.iter().filter(|r| !r.1).filter_map(|r| r.0.as_ref().ok()))?;
    }
    Ok(AtlasRun {
        classes,
        records: results.into_iter().map(|r| r.0).collect(),
        cache_hits,
        corrupted_cache_lines: loaded.corrupted,
    })
}

/// The set of `(reg, pdim)` pairs realised on `n` vertices.
pub fn computed_pairs(n: usize, opts: &VerifyOptions) -> Result<BTreeSet<(usize, usize)>> {
    let run = atlas_records(n, opts)?;
    run.records.into_iter().map(|r| r.map(|rec| rec.pair())).collect()
}

/// Runs the full sweep for `n`. Property failures are part of the report;
/// only guard violations and cache I/O are errors.
pub fn verify(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let run = atlas_records(n, opts)?;
    let reg_by_code: HashMap<&str, usize> =
        run.records.iter().filter_map(|r| r.as_ref().ok()).map(|r| (r.code.as_str(), r.tuple.reg)).collect();

    let outcomes: Vec<Vec<(Property, std::result::Result<(), String>)>> = run
        .classes
        .par_iter()
        .zip(&run.records)
        .map(|(class, rec)| match rec {
            Ok(rec) => check_graph(&class.graph, rec, &reg_by_code, opts),
            Err(e) => vec![(Property::Pipeline, Err(e.to_string()))],
        })
        .collect();

    let mut properties: BTreeMap<Property, PropertyCount> = BTreeMap::new();
    let mut failures = Vec::new();
    for (class, checks) in run.classes.iter().zip(outcomes) {
        for (property, outcome) in checks {
            let count = properties.entry(property).or_default();
            count.checked += 1;
            match outcome {
                Ok(()) => count.passed += 1,
                Err(detail) => failures.push(Counterexample {
                    code: class.code.to_hex(),
                    edges: GraphJson::from(&class.graph).edges,
                    property,
                    detail,
                }),
            }
        }
    }

    let computed: BTreeSet<(usize, usize)> =
        run.records.iter().filter_map(|r| r.as_ref().ok()).map(AtlasRecord::pair).collect();
    let theoretical = theoretical_pairs(n);
    Ok(VerificationReport {
        n,
        class_count: run.classes.len(),
        equal: computed == theoretical,
        computed,
        theoretical,
        cardinality_formula: cardinality_formula(n),
        properties,
        failures,
        cache_hits: run.cache_hits,
        corrupted_cache_lines: run.corrupted_cache_lines,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn check_graph(
    g: &Graph,
    rec: &AtlasRecord,
    reg_by_code: &HashMap<&str, usize>,
    opts: &VerifyOptions,
) -> Vec<(Property, std::result::Result<(), String>)> {
    let t = &rec.tuple;
    let mut out: Vec<(Property, std::result::Result<(), String>)> = property_sweep(g, t, rec.matching)
        .into_iter()
        .map(|(p, ok)| (p, if ok { Ok(()) } else { Err(format!("tuple {t}, mat {}", rec.matching)) }))
        .collect();

    let h1 = rec.h_poly.eval_at_one();
    out.push((Property::HilbertSerre, if h1 != 0 { Ok(()) } else { Err(format!("h = {}", rec.h_poly)) }));

    if opts.lex_check {
        let outcome = match analyze_unchecked(g, &MonomialOrder::lex()) {
            Ok(a) if a.hilbert.h_poly == rec.h_poly => Ok(()),
            Ok(a) => Err(format!("lex h = {}, degrevlex h = {}", a.hilbert.h_poly, rec.h_poly)),
            Err(e) => Err(e.to_string()),
        };
        out.push((Property::OrderIndependence, outcome));
    }

    if opts.monotonicity {
        out.push((Property::EdgeDeletionMonotone, check_monotone(g, t.reg, reg_by_code)));
    }

    if opts.betti_max_edges.is_some_and(|m| g.num_edges() <= m) {
        out.push((Property::BettiOracle, check_betti(g, t)));
    }
    out
}

fn check_monotone(
    g: &Graph,
    reg: usize,
    reg_by_code: &HashMap<&str, usize>,
) -> std::result::Result<(), String> {
    for e in 0..g.num_edges() {
        let h = g.without_edge(e);
        if !h.is_connected() {
            continue;
        }
        let code = canonical_form(&h).to_hex();
        match reg_by_code.get(code.as_str()) {
            Some(&sub) if sub <= reg => {}
            Some(&sub) => {
                return Err(format!("deleting edge {:?} raises reg from {reg} to {sub}", g.edge(e)))
            }
            None => {
                return Err(format!("subgraph without edge {:?} missing from the enumeration", g.edge(e)))
            }
        }
    }
    Ok(())
}

fn check_betti(g: &Graph, t: &InvariantTuple) -> std::result::Result<(), String> {
    let numerator =
        analyze_unchecked(g, &MonomialOrder::default()).map_err(|e| e.to_string())?.hilbert.numerator;
    let table = betti_table(g, t.reg, t.pdim).map_err(|e: Error| e.to_string())?;
    let from_betti = invariants_from_betti(&table);
    if from_betti != (t.reg, t.pdim) {
        return Err(format!("Betti (reg, pdim) = {from_betti:?}, Hilbert route ({}, {})", t.reg, t.pdim));
    }
    if !table.guard_clean() {
        return Err("nonzero Betti number outside the expected bounds".into());
    }
    if table.euler_polynomial() != numerator {
        return Err(format!("Euler characteristic {} != numerator {numerator}", table.euler_polynomial()));
    }
    Ok(())
}
