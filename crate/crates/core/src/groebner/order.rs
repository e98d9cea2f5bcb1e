use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::toric::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    #[default]
    Degrevlex,
    Deglex,
    Lex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Degrevlex => "degrevlex",
            OrderKind::Deglex => "deglex",
            OrderKind::Lex => "lex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" => Ok(OrderKind::Degrevlex),
            "deglex" | "grlex" => Ok(OrderKind::Deglex),
            "lex" => Ok(OrderKind::Lex),
            _ => Err(Error::InvalidParameters(format!("unknown monomial order {s:?}"))),
        }
    }
}

/// A monomial order on the edge variables.
///
/// `priority[k]` names the variable with the `k`-th highest priority; without
/// an explicit priority `e_1 > e_2 > ... > e_q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        Self { kind, priority: None }
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::Degrevlex)
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    /// `priority` must be a permutation of `0..q`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidParameters("variable priority is not a permutation".into()));
        }
        Ok(Self { kind, priority: Some(priority) })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    #[inline]
    fn var(&self, k: usize) -> usize {
        self.priority.as_ref().map_or(k, |p| p[k])
    }

    /// Checked comparison; errors when the monomials live in different rings.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.num_vars() != b.num_vars() {
            return Err(Error::LengthMismatch(a.num_vars(), b.num_vars()));
        }
        if let Some(p) = &self.priority {
            if p.len() != a.num_vars() {
                return Err(Error::LengthMismatch(p.len(), a.num_vars()));
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison for monomials over the same variables.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let q = ea.len();
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb),
            OrderKind::Deglex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(ea, eb)),
            OrderKind::Degrevlex => a.degree().cmp(&b.degree()).then_with(|| {
                // Last differing variable decides; the smaller exponent wins.
                (0..q)
                    .rev()
                    .map(|k| self.var(k))
                    .find(|&v| ea[v] != eb[v])
                    .map_or(Ordering::Equal, |v| eb[v].cmp(&ea[v]))
            }),
        }
    }

    fn lex_cmp(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        (0..ea.len())
            .map(|k| self.var(k))
            .find(|&v| ea[v] != eb[v])
            .map_or(Ordering::Equal, |v| ea[v].cmp(&eb[v]))
    }
}
