//! Permutations of strand positions.
//!
//! Internally images are 0-based; the text and JSON forms are 1-based, so
//! `(2,1,4,5,3)` means strand 1 ends at position 2, strand 2 at position 1,
//! and so on.

use std::fmt;

use num_integer::Integer;

use crate::error::{BraidError, Result};

/// Default bound on permutation orders accepted by the invariant routines.
///
/// The order of a permutation of `n` points can grow like Landau's function,
/// and the pure-power sum costs one matrix reindexing per unit of order.
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000;

/// A bijection of `{0, .., n-1}` stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping the 1-based positions `i` and `i + 1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(BraidError::GeneratorOutOfRange { index: i, strands: n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(BraidError::InvalidPermutation(format!("{images:?}")));
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images such as `[2, 1, 4, 5, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&j| {
                j.checked_sub(1)
                    .ok_or_else(|| BraidError::InvalidPermutation(format!("{images:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(shifted)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|j| j + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Applies `self` first and then `next`, i.e. `next ∘ self`.
    ///
    /// This is the permutation of a product word `w1 w2` when `self` belongs
    /// to `w1` and `next` to `w2`.
    pub fn then(&self, next: &Permutation) -> Result<Self> {
        if self.len() != next.len() {
            return Err(BraidError::DimensionMismatch {
                left: self.len(),
                right: next.len(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&j| next.images[j]).collect(),
        })
    }

    /// The `k`-th power, computed cycle by cycle.
    pub fn pow(&self, k: u64) -> Self {
        let mut images = vec![0; self.len()];
        for cycle in self.cycles() {
            let len = cycle.len() as u64;
            let shift = (k % len) as usize;
            for (pos, &point) in cycle.iter().enumerate() {
                images[point] = cycle[(pos + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }

    /// Disjoint cycles, each starting at its smallest point, in order of
    /// their smallest points. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Order of the permutation (lcm of its cycle lengths), or an error once
    /// it exceeds `limit`.
    pub fn order_with_limit(&self, limit: u64) -> Result<u64> {
        let mut order: u128 = 1;
        for cycle in self.cycles() {
            order = order.lcm(&(cycle.len() as u128));
            if order > limit as u128 {
                return Err(BraidError::OrderLimitExceeded { limit });
            }
        }
        Ok(order as u64)
    }

    /// Order under [`DEFAULT_MAX_ORDER`].
    pub fn order(&self) -> Result<u64> {
        self.order_with_limit(DEFAULT_MAX_ORDER)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, j) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    #[test]
    fn order_of_example_permutation() {
        assert_eq!(perm(&[2, 1, 4, 5, 3]).order().unwrap(), 6);
        assert_eq!(Permutation::identity(4).order().unwrap(), 1);
        assert_eq!(perm(&[3, 1, 2]).order().unwrap(), 3);
        assert_eq!(Permutation::identity(0).order().unwrap(), 1);
    }

    #[test]
    fn order_guard() {
        // 3-cycle and 5-cycle and 7-cycle: order 105
        let p = perm(&[2, 3, 1, 5, 6, 7, 8, 4, 10, 11, 12, 13, 14, 15, 9]);
        assert_eq!(p.order().unwrap(), 105);
        assert_eq!(
            p.order_with_limit(100),
            Err(BraidError::OrderLimitExceeded { limit: 100 })
        );
        assert_eq!(p.order_with_limit(105).unwrap(), 105);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_one_based(&[1, 3]).is_err());
    }

    #[test]
    fn composition_and_inverse() {
        let p = perm(&[2, 3, 1]);
        let q = perm(&[2, 1, 3]);
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(p.then(&q).unwrap(), perm(&[1, 3, 2]));
        assert!(p.then(&p.inverse()).unwrap().is_identity());
        assert!(p.then(&Permutation::identity(2)).is_err());
    }

    #[test]
    fn powers_match_repeated_composition() {
        let p = perm(&[2, 1, 4, 5, 3]);
        let mut acc = Permutation::identity(5);
        for k in 0..13 {
            assert_eq!(p.pow(k), acc, "k = {k}");
            acc = acc.then(&p).unwrap();
        }
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(perm(&[2, 1, 4, 5, 3]).to_string(), "(2,1,4,5,3)");
        assert_eq!(
            Permutation::adjacent_transposition(3, 1).unwrap().to_string(),
            "(2,1,3)"
        );
        assert!(Permutation::adjacent_transposition(3, 3).is_err());
    }
}
