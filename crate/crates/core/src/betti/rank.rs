//! Exact matrix rank over the rationals by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Rank of an integer matrix over `Q`.
///
/// Runs Bareiss elimination in `i128` and restarts in arbitrary precision if
/// any intermediate value overflows.
pub fn rank_exact(rows: &[Vec<i64>]) -> Result<usize> {
    let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(m) {
        Some(r) => r,
        None => {
            let m = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_big(m)
        }
    }
}

/// `None` on overflow.
fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<Result<usize>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c];
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom {
            let factor = row[c];
            for (x, &pk) in row[c + 1..].iter_mut().zip(&prow[c + 1..]) {
                let num = pivot.checked_mul(*x)?.checked_sub(factor.checked_mul(pk)?)?;
                if num % prev != 0 {
                    return Some(Err(Error::Internal("inexact Bareiss division".into())));
                }
                *x = num / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(Ok(rank))
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> Result<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom {
            let factor = row[c].clone();
            for (x, pk) in row[c + 1..].iter_mut().zip(&prow[c + 1..]) {
                let num = &pivot * &*x - &factor * pk;
                if !(&num % &prev).is_zero() {
                    return Err(Error::Internal("inexact Bareiss division".into()));
                }
                *x = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}
