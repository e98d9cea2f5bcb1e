//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use toric_core::atlas::{
    cardinality_formula, cardinality_sum, enumerate_connected_bipartite, theoretical_pairs, verify, Property,
    VerificationReport, VerifyOptions,
};
use toric_core::graph::{complete_bipartite, construct_g_nrp, construct_h_nrp, cycle_graph, realizing_graph};
use toric_core::hilbert::invariant_tuple;
use toric_core::{Graph, InvariantTuple};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Full sweeps for `n = 2..=9`, with the Betti oracle on graphs of at most 8 edges.
struct Sweeps(BTreeMap<usize, VerificationReport>);

impl Sweeps {
    fn run() -> Self {
        let opts = VerifyOptions { betti_max_edges: Some(8), ..Default::default() };
        Sweeps((2..=9).map(|n| (n, verify(n, &opts).expect("sweep runs"))).collect())
    }

    fn get(&self, n: usize) -> &VerificationReport {
        &self.0[&n]
    }
}

fn criterion_1(s: &Sweeps) -> Outcome {
    for n in 2..=8 {
        let r = s.get(n);
        ensure(r.computed == r.theoretical, || {
            format!("n={n}: computed {:?} != theoretical {:?}", r.computed, r.theoretical)
        })?;
    }
    let eight = s.get(8);
    ensure(eight.computed.len() == 23, || format!("n=8 gave {} pairs", eight.computed.len()))?;
    Ok(format!("n=2..8 equal to the theoretical sets; n=8: {} classes, 23 pairs", eight.class_count))
}

fn criterion_2(s: &Sweeps) -> Outcome {
    let r = s.get(9);
    ensure(r.computed == r.theoretical, || format!("n=9 computed {:?}", r.computed))?;
    ensure(r.computed.len() == 29, || format!("n=9 gave {} pairs", r.computed.len()))?;
    let max = r.computed.iter().copied().max_by_key(|&(r, p)| (p, r));
    ensure(max == Some((3, 12)), || format!("max point {max:?}"))?;
    Ok(format!("n=9: {} classes, 29 pairs, max point (3,12)", r.class_count))
}

fn criterion_3(s: &Sweeps) -> Outcome {
    for n in 2..=9 {
        let got = s.get(n).computed.len() as i64;
        ensure(got == cardinality_formula(n), || {
            format!("n={n}: {got} pairs, formula {}", cardinality_formula(n))
        })?;
    }
    for n in 2..=100 {
        ensure(cardinality_formula(n) == cardinality_sum(n), || format!("identity fails at n={n}"))?;
        ensure(cardinality_formula(n) == theoretical_pairs(n).len() as i64, || {
            format!("set size differs at n={n}")
        })?;
    }
    Ok("|computed| = formula for n <= 9; closed form = direct sum for n <= 100".into())
}

fn criterion_4() -> Outcome {
    for a in 1..=4 {
        for b in a..=4 {
            let t = invariant_tuple(&complete_bipartite(a, b).unwrap()).map_err(|e| e.to_string())?;
            ensure(t.reg == a - 1, || format!("reg K_{{{a},{b}}} = {}", t.reg))?;
        }
    }
    for r in 2..=5 {
        let t = invariant_tuple(&cycle_graph(2 * r).unwrap()).map_err(|e| e.to_string())?;
        ensure(t.reg == r - 1, || format!("reg C_{} = {}", 2 * r, t.reg))?;
    }
    Ok("reg K_{a,b} = min(a,b) - 1 for a <= b <= 4; reg C_2r = r - 1 for r = 2..5".into())
}

fn expect_tuple(g: &Graph, r: usize, p: usize, label: &str) -> Result<(), String> {
    let n = g.num_vertices();
    let want = InvariantTuple { reg: r, deg_h: r, pdim: p, depth: n - 1, dim: n - 1 };
    let got = invariant_tuple(g).map_err(|e| format!("{label}: {e}"))?;
    ensure(got == want, || format!("{label}: got {got}, want {want}"))
}

fn criterion_5() -> Outcome {
    let g_10_3_2 = [(0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (0, 7), (3, 8), (3, 9), (0, 5)];
    let g = construct_g_nrp(10, 3, 2).map_err(|e| e.to_string())?;
    ensure(g.edges() == g_10_3_2, || format!("G_10,3,2 edges {:?}", g.edges()))?;
    expect_tuple(&Graph::new(10, g_10_3_2).unwrap(), 3, 2, "G_10,3,2 edge list")?;

    let mut h_10_3_12: Vec<(usize, usize)> = (0..4).flat_map(|i| (4..8).map(move |j| (i, j))).collect();
    h_10_3_12.extend([(3, 8), (3, 9), (0, 8), (0, 9), (1, 8)]);
    let h = construct_h_nrp(10, 3, 12).map_err(|e| e.to_string())?;
    ensure(h.edges() == h_10_3_12.as_slice(), || format!("H_10,3,12 edges {:?}", h.edges()))?;
    expect_tuple(&Graph::new(10, h_10_3_12).unwrap(), 3, 12, "H_10,3,12 edge list")?;

    let mut built = 0;
    for n in 2..=10 {
        for &(r, p) in theoretical_pairs(n).iter().filter(|&&pair| pair != (0, 0)) {
            if p <= r * r {
                let g = construct_g_nrp(n, r, p).map_err(|e| e.to_string())?;
                expect_tuple(&g, r, p, &format!("G_{n},{r},{p}"))?;
                built += 1;
            }
            if p >= r * r {
                let h = construct_h_nrp(n, r, p).map_err(|e| e.to_string())?;
                expect_tuple(&h, r, p, &format!("H_{n},{r},{p}"))?;
                built += 1;
            }
        }
    }
    Ok(format!("{built} constructions for n <= 10 plus the explicit G_10,3,2 and H_10,3,12 edge lists give (r, r, p, n-1, n-1)"))
}

fn criterion_6(s: &Sweeps) -> Outcome {
    let mut expected = 0;
    let mut checked = 0;
    for n in 2..=9 {
        expected += enumerate_connected_bipartite(n, false)
            .unwrap()
            .iter()
            .filter(|c| c.graph.num_edges() <= 8)
            .count();
        let r = s.get(n);
        let count = r.properties.get(&Property::BettiOracle).copied().unwrap_or_default();
        ensure(count.passed == count.checked, || {
            let bad: Vec<_> = r.failures.iter().filter(|f| f.property == Property::BettiOracle).collect();
            format!("n={n}: Betti oracle failures {bad:?}")
        })?;
        checked += count.checked;
    }
    ensure(checked == expected, || format!("oracle ran on {checked} graphs, expected {expected}"))?;
    Ok(format!("Koszul (reg, pdim) and Euler characteristic agree on all {checked} graphs with q <= 8"))
}

fn criterion_7(s: &Sweeps) -> Outcome {
    let required = [
        Property::DimDepth,
        Property::PdimFormula,
        Property::RegBelowHalf,
        Property::RegBelowMatching,
        Property::MatchingBound,
        Property::EdgeBound,
        Property::ForestEquivalence,
        Property::HilbertSerre,
        Property::OrderIndependence,
        Property::TupleShape,
        Property::EdgeDeletionMonotone,
    ];
    let mut graphs = 0;
    for n in 2..=9 {
        let r = s.get(n);
        ensure(r.failures.is_empty(), || format!("n={n}: counterexamples {:?}", r.failures))?;
        for p in required {
            let c = r.properties.get(&p).copied().unwrap_or_default();
            ensure(c.checked == r.class_count && c.passed == c.checked, || {
                format!("n={n}: {p} passed {}/{} of {} graphs", c.passed, c.checked, r.class_count)
            })?;
        }
        graphs += r.class_count;
    }
    Ok(format!("{} properties hold on all {graphs} graphs with n <= 9", required.len()))
}

fn criterion_8() -> Outcome {
    for r in 1..=4 {
        for p in 1..=4 {
            let g = realizing_graph(r, p).map_err(|e| e.to_string())?;
            let n = 2 + r + r.max(p);
            ensure(g.num_vertices() == n, || format!("({r},{p}): {} vertices, want {n}", g.num_vertices()))?;
            expect_tuple(&g, r, p, &format!("realizing ({r},{p})"))?;
        }
    }
    Ok("all 16 pairs in {1..4}^2 realised on 2 + r + max(r, p) vertices".into())
}

fn run(id: usize, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("PASS [{id}] {title}: {detail} ({secs:.2}s)");
            true
        }
        Err(detail) => {
            println!("FAIL [{id}] {title}: {detail} ({secs:.2}s)");
            false
        }
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let sweeps = Sweeps::run();
    println!("sweeps for n = 2..9 finished in {:.2}s", start.elapsed().as_secs_f64());
    let results = [
        run(1, "pair sets for n = 2..8", || criterion_1(&sweeps)),
        run(2, "pair set for n = 9", || criterion_2(&sweeps)),
        run(3, "counting formula", || criterion_3(&sweeps)),
        run(4, "complete bipartite graphs and even cycles", criterion_4),
        run(5, "constructor grid", criterion_5),
        run(6, "Betti oracle agreement", || criterion_6(&sweeps)),
        run(7, "property suite", || criterion_7(&sweeps)),
        run(8, "realizing graphs", criterion_8),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
