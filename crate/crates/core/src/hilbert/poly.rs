use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Polynomial in `t` with integer coefficients, lowest degree first, trailing
/// zeros trimmed. The zero polynomial has no coefficients and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: usize) -> Self {
        if d == 0 {
            return Self::zero();
        }
        let mut c = vec![0; d + 1];
        c[0] = 1;
        c[d] = -1;
        IntPolynomial(c)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_to(k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * &Self::one_minus_t_pow(1))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.0);
        IntPolynomial(c)
    }

    /// Exact division by `1 - t`, or `None` if `1 - t` does not divide.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // q_k = sum_{i <= k} p_i
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len());
        for &c in &self.0 {
            acc += c;
            out.push(acc);
        }
        Some(IntPolynomial::new(out))
    }

    /// The first `terms` coefficients of `self / (1 - t)^k` as a power series.
    pub fn series_over_one_minus_t(&self, k: usize, terms: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..terms).map(|d| self.coeff(d)).collect();
        for _ in 0..k {
            for d in 1..terms {
                s[d] += s[d - 1];
            }
        }
        s
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }
}

impl fmt::Display for IntPolynomial {
    /// `1 - 3t^2 + 2t^3`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let abs = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (d, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
