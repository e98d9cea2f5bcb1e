use std::fmt;
use std::str::FromStr;

use toric_core::graph::{
    complete_bipartite, construct_g_nrp, construct_h_nrp, cycle_graph, path_graph, realizing_graph, star,
};
use toric_core::{Error, Graph, Result};

/// Named graph families, parameterised by positional integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `tree N`: the path on `N` vertices.
    Tree,
    Path,
    Star,
    Cycle,
    CompleteBipartite,
    Gnrp,
    Hnrp,
    Realizing,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Tree,
        Family::Path,
        Family::Star,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::Gnrp,
        Family::Hnrp,
        Family::Realizing,
    ];

    fn name(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Path => "path",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Gnrp => "gnrp",
            Family::Hnrp => "hnrp",
            Family::Realizing => "realizing",
        }
    }

    fn arity(self) -> &'static [&'static str] {
        match self {
            Family::Tree | Family::Path | Family::Star => &["n"],
            Family::Cycle => &["m"],
            Family::CompleteBipartite => &["a", "b"],
            Family::Gnrp | Family::Hnrp => &["n", "r", "p"],
            Family::Realizing => &["r", "p"],
        }
    }

    /// Builds the member with the given parameters.
    pub fn build(self, params: &[usize]) -> Result<Graph> {
        let names = self.arity();
        if params.len() != names.len() {
            return Err(Error::InvalidParameters(format!(
                "family {self} takes {} parameter(s) ({}), got {}",
                names.len(),
                names.join(" "),
                params.len()
            )));
        }
        match (self, params) {
            (Family::Tree | Family::Path, &[n]) => path_graph(n),
            (Family::Star, &[n]) => star(n),
            (Family::Cycle, &[m]) => cycle_graph(m),
            (Family::CompleteBipartite, &[a, b]) => complete_bipartite(a, b),
            (Family::Gnrp, &[n, r, p]) => construct_g_nrp(n, r, p),
            (Family::Hnrp, &[n, r, p]) => construct_h_nrp(n, r, p),
            (Family::Realizing, &[r, p]) => realizing_graph(r, p),
            _ => unreachable!("arity checked above"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("unknown family {s:?}; expected one of {}", names.join(", "))
        })
    }
}
