//! Crossing matrices of braid words.
//!
//! `C(B)(i, j)` counts positive minus negative crossings at which strand `i`
//! passes over strand `j`, strands being named by their starting position.
//! At `σᵢ` the strand at position `i + 1` goes over; at `σᵢ⁻¹` the strand
//! at position `i` goes over.

use std::ops::Deref;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::braid::{BraidWord, Letter, Sign};
use crate::error::{BraidError, Result};
use crate::linalg::IntMatrix;
use crate::permutation::{Permutation, DEFAULT_MAX_ORDER};

/// A zero-diagonal integer matrix indexed by strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossingMatrix(IntMatrix);

impl CrossingMatrix {
    pub fn zeros(n: usize) -> Self {
        CrossingMatrix(IntMatrix::zeros(n))
    }

    /// Wraps a matrix after checking that its diagonal is zero.
    pub fn from_matrix(m: IntMatrix) -> Result<Self> {
        if let Some(i) = (0..m.dim()).find(|&i| !m[(i, i)].is_zero()) {
            return Err(BraidError::NonzeroDiagonal(i + 1));
        }
        Ok(CrossingMatrix(m))
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    /// `ρ(M)`, see [`apply_perm_to_matrix`].
    pub fn permuted(&self, p: &Permutation) -> Result<Self> {
        self.0.permuted(p).map(CrossingMatrix)
    }

    pub fn checked_add(&self, other: &CrossingMatrix) -> Result<Self> {
        self.0.checked_add(&other.0).map(CrossingMatrix)
    }

    /// `C + I`, the matrix whose determinant is the Q-determinant.
    pub fn plus_identity(&self) -> IntMatrix {
        &self.0 + &IntMatrix::identity(self.0.dim())
    }
}

impl Deref for CrossingMatrix {
    type Target = IntMatrix;

    fn deref(&self) -> &IntMatrix {
        &self.0
    }
}

/// Traces the strands through the word and accumulates signed crossings.
pub fn crossing_matrix(word: &BraidWord) -> CrossingMatrix {
    let n = word.strands();
    let mut m = IntMatrix::zeros(n);
    let mut strand_at: Vec<usize> = (0..n).collect();
    for letter in word.letters() {
        let left = letter.index() - 1;
        let (left_strand, right_strand) = (strand_at[left], strand_at[left + 1]);
        match letter.sign() {
            Sign::Positive => m[(right_strand, left_strand)] += 1,
            Sign::Negative => m[(left_strand, right_strand)] -= 1,
        }
        strand_at.swap(left, left + 1);
    }
    CrossingMatrix(m)
}

/// `ρ(M)(i, j) = M(ρ⁻¹(i), ρ⁻¹(j))`.
pub fn apply_perm_to_matrix(p: &Permutation, m: &CrossingMatrix) -> Result<CrossingMatrix> {
    m.permuted(p)
}

/// `Σ_{k=0}^{|ρ|-1} ρᵏ(C(w))`, which is the crossing matrix of the pure
/// braid `w^|ρ|`. Fails if `|ρ|` exceeds [`DEFAULT_MAX_ORDER`].
pub fn pure_power_sum(word: &BraidWord) -> Result<CrossingMatrix> {
    pure_power_sum_with_limit(word, DEFAULT_MAX_ORDER)
}

pub fn pure_power_sum_with_limit(word: &BraidWord, max_order: u64) -> Result<CrossingMatrix> {
    let rho = word.permutation();
    let order = rho.order_with_limit(max_order)?;
    let c = crossing_matrix(word);
    let mut term = c.clone();
    let mut sum = c;
    for _ in 1..order {
        term = term.permuted(&rho)?;
        sum = sum.checked_add(&term)?;
    }
    Ok(sum)
}

/// Builds a pure braid word whose crossing matrix is `m`.
///
/// `m` must be symmetric with zero diagonal. The word is the product over
/// `i < j` (lexicographic) of `A_ij^m(i,j)`, where
/// `A_ij = σⱼ₋₁…σᵢ₊₁ σᵢ² σᵢ₊₁⁻¹…σⱼ₋₁⁻¹` is the pure braid in which strand
/// `j` wraps once around strand `i`.
pub fn realize_pure(m: &IntMatrix) -> Result<BraidWord> {
    let n = m.dim();
    for i in 0..n {
        if !m[(i, i)].is_zero() {
            return Err(BraidError::NonzeroDiagonal(i + 1));
        }
        for j in 0..i {
            if m[(i, j)] != m[(j, i)] {
                return Err(BraidError::NotSymmetric(j + 1, i + 1));
            }
        }
    }
    let mut letters = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let exponent = &m[(i - 1, j - 1)];
            if exponent.is_zero() {
                continue;
            }
            let mut generator = wrap_word(i, j);
            if exponent.is_negative() {
                generator = generator.into_iter().rev().map(Letter::inverse).collect();
            }
            let reps = exponent
                .abs()
                .to_usize()
                .ok_or_else(|| BraidError::OracleGuard(format!("exponent {exponent} too large")))?;
            for _ in 0..reps {
                letters.extend_from_slice(&generator);
            }
        }
    }
    BraidWord::new(n.max(1), letters)
}

fn wrap_word(i: usize, j: usize) -> Vec<Letter> {
    let mut w: Vec<Letter> = (i + 1..j).rev().map(Letter::positive).collect();
    w.push(Letter::positive(i));
    w.push(Letter::positive(i));
    w.extend((i + 1..j).map(Letter::negative));
    w
}

/// The crossing matrix of `w1 · w2` assembled from its factors.
///
/// Strand `a` of `w2` is the continuation of strand `ρ₁⁻¹(a)` of `w1`, so
/// the contribution of `w2` is `C(w2)` reindexed by `ρ₁⁻¹`:
/// `C(w1 w2)(i, j) = C(w1)(i, j) + C(w2)(ρ₁(i), ρ₁(j))`.
pub fn product_crossing_matrix(w1: &BraidWord, w2: &BraidWord) -> Result<CrossingMatrix> {
    if w1.strands() != w2.strands() {
        return Err(BraidError::StrandMismatch {
            left: w1.strands(),
            right: w2.strands(),
        });
    }
    let moved = crossing_matrix(w2).permuted(&w1.permutation().inverse())?;
    crossing_matrix(w1).checked_add(&moved)
}
