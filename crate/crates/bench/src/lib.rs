//! Fixed inputs shared by the benchmarks.

use toric_core::graph::{complete_bipartite, construct_g_nrp, construct_h_nrp, cycle_graph};
use toric_core::Graph;

/// Named graphs of increasing size for the per-graph benchmarks.
pub fn bench_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("C8", cycle_graph(8).expect("valid cycle")),
        ("K33", complete_bipartite(3, 3).expect("valid K_{a,b}")),
        ("G_10_3_7", construct_g_nrp(10, 3, 7).expect("valid G")),
        ("K44", complete_bipartite(4, 4).expect("valid K_{a,b}")),
        ("H_10_3_12", construct_h_nrp(10, 3, 12).expect("valid H")),
        ("K45", complete_bipartite(4, 5).expect("valid K_{a,b}")),
    ]
}
