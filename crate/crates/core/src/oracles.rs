//! Slow, independent reference implementations used to cross-check the
//! production routines. None of these share code paths with the
//! elimination, Berkowitz or permutation-sum routines they check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid::BraidWord;
use crate::crossing::crossing_matrix;
use crate::error::{BraidError, Result};
use crate::linalg::{permutation_similarity, IntMatrix, IntPolynomial};
use crate::permutation::{Permutation, DEFAULT_MAX_ORDER};

/// Largest dimension accepted by the cofactor-expansion oracles.
pub const NAIVE_MAX_DIM: usize = 7;

/// Largest `|ρ| · len(w)` accepted by [`direct_power_matrix`].
pub const DIRECT_POWER_MAX_LETTERS: u64 = 10_000_000;

/// Determinant by Laplace expansion along the first row.
pub fn naive_determinant(m: &IntMatrix) -> Result<BigInt> {
    if m.dim() > NAIVE_MAX_DIM {
        return Err(BraidError::OracleGuard(format!(
            "cofactor expansion limited to {NAIVE_MAX_DIM}x{NAIVE_MAX_DIM}"
        )));
    }
    let rows: Vec<usize> = (0..m.dim()).collect();
    let cols = rows.clone();
    Ok(minor(m, &rows, &cols))
}

fn minor(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    match rows.len() {
        0 => BigInt::one(),
        1 => m[(rows[0], cols[0])].clone(),
        _ => {
            let mut total = BigInt::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = &m[(rows[0], c)];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry * minor(m, &rows[1..], &rest);
                if k % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Rank as the size of the largest nonvanishing minor.
pub fn naive_rank(m: &IntMatrix) -> Result<usize> {
    let n = m.dim();
    if n > NAIVE_MAX_DIM {
        return Err(BraidError::OracleGuard(format!(
            "minor enumeration limited to {NAIVE_MAX_DIM}x{NAIVE_MAX_DIM}"
        )));
    }
    for k in (1..=n).rev() {
        let subsets = subsets_of_size(n, k);
        for rows in &subsets {
            for cols in &subsets {
                if !minor(m, rows, cols).is_zero() {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// `det(xI - M)` by evaluating cofactor determinants at `x = 0..=n` and
/// interpolating in the Newton forward-difference basis.
pub fn naive_characteristic_polynomial(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.dim();
    let values = (0..=n)
        .map(|x| {
            let shifted = IntMatrix::from_fn(n, |i, j| {
                let diag = if i == j { BigInt::from(x) } else { BigInt::zero() };
                diag - &m[(i, j)]
            });
            naive_determinant(&shifted)
        })
        .collect::<Result<Vec<_>>>()?;

    // forward differences Δᵏp(0)
    let mut diffs = Vec::with_capacity(n + 1);
    let mut row = values;
    while !row.is_empty() {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }

    // p(x) = Σ Δᵏp(0) · x(x-1)…(x-k+1) / k!, accumulated over n!
    let factorial = |k: usize| (1..=k).fold(BigInt::one(), |acc, i| acc * i);
    let n_fact = factorial(n);
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut falling = vec![BigInt::one()];
    for (k, d) in diffs.iter().enumerate() {
        let scale = d * (&n_fact / factorial(k));
        for (deg, c) in falling.iter().enumerate() {
            acc[deg] += &scale * c;
        }
        // falling *= (x - k)
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (deg, c) in falling.iter().enumerate() {
            next[deg + 1] += c;
            next[deg] -= c * k;
        }
        falling = next;
    }
    Ok(IntPolynomial::new(acc.into_iter().map(|c| c / &n_fact).collect()))
}

/// `C(w^|ρ|)` by literally tracing the repeated word.
pub fn direct_power_matrix(word: &BraidWord) -> Result<IntMatrix> {
    let order = word.permutation().order_with_limit(DEFAULT_MAX_ORDER)?;
    let letters = order.saturating_mul(word.len() as u64);
    if letters > DIRECT_POWER_MAX_LETTERS {
        return Err(BraidError::OracleGuard(format!(
            "{letters} letters exceed {DIRECT_POWER_MAX_LETTERS}"
        )));
    }
    Ok(crossing_matrix(&word.power(order as usize)).into_matrix())
}

/// Checks `Qᵀ M Q == ρ(M)` by explicit multiplication.
pub fn similarity_witness_check(p: &Permutation, m: &IntMatrix) -> Result<bool> {
    let permuted = m.permuted(p)?;
    let q = permutation_similarity(p);
    let conjugated = q.transpose().checked_mul(m)?.checked_mul(&q)?;
    let orthogonal = q.transpose().checked_mul(&q)? == IntMatrix::identity(p.len());
    Ok(orthogonal && conjugated == permuted)
}
