//! Exact linear algebra over arbitrary-precision integers.
//!
//! Nothing here rounds: determinants and ranks use fraction-free (Bareiss)
//! elimination and the characteristic polynomial uses Berkowitz's
//! division-free algorithm.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{BraidError, Result};
use crate::permutation::Permutation;

/// A square matrix of big integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as
    /// there are rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(BraidError::NotSquare);
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        Ok(IntMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        // chunks_exact(0) panics, so the empty matrix gets an empty iterator
        self.entries.chunks_exact(self.n.max(1)).take(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self[(i, i)].is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    /// Simultaneous row and column reindexing: `N(ρ(a), ρ(b)) = M(a, b)`,
    /// equivalently `N(i, j) = M(ρ⁻¹(i), ρ⁻¹(j))`.
    pub fn permuted(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.n {
            return Err(BraidError::DimensionMismatch {
                left: p.len(),
                right: self.n,
            });
        }
        let mut out = Self::zeros(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                out[(p.image(a), p.image(b))] = self[(a, b)].clone();
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &IntMatrix) -> Result<Self> {
        self.check_dim(other)?;
        Ok(IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        }))
    }

    /// Exact determinant by Bareiss elimination with row pivoting.
    ///
    /// The empty matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        let mut a = self.to_rows();
        let n = self.n;
        let mut sign_flip = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            if pivot != k {
                a.swap(pivot, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // exact by Sylvester's identity
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
        if sign_flip {
            -det
        } else {
            det
        }
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let n = self.n;
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pivot, rank);
            for i in rank + 1..n {
                for j in col + 1..n {
                    let v = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                    a[i][j] = v / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// `det(xI - M)` by Berkowitz's algorithm.
    ///
    /// Works from the trailing 1×1 principal submatrix outwards; each step
    /// multiplies the current coefficient vector by a Toeplitz matrix built
    /// from the new border row and column.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let n = self.n;
        // coefficients in descending degree, starting from the 0×0 matrix
        let mut desc = vec![BigInt::one()];
        for k in (0..n).rev() {
            let m = n - k;
            let a = &self[(k, k)];
            let row: Vec<&BigInt> = (k + 1..n).map(|j| &self[(k, j)]).collect();
            let mut col: Vec<BigInt> = (k + 1..n).map(|i| self[(i, k)].clone()).collect();

            // toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{m-2} C
            let mut diag = Vec::with_capacity(m + 1);
            diag.push(BigInt::one());
            diag.push(-a);
            for step in 0..m.saturating_sub(1) {
                let dot: BigInt = row.iter().zip(&col).map(|(r, c)| *r * c).sum();
                diag.push(-dot);
                if step + 2 < m {
                    col = (k + 1..n)
                        .map(|i| (k + 1..n).zip(&col).map(|(j, c)| &self[(i, j)] * c).sum())
                        .collect();
                }
            }

            let next: Vec<BigInt> = (0..=m)
                .map(|i| (0..m.min(i + 1)).map(|j| &diag[i - j] * &desc[j]).sum())
                .collect();
            desc = next;
        }
        desc.reverse();
        IntPolynomial::new(desc)
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(<[BigInt]>::to_vec).collect()
    }

    fn check_dim(&self, other: &IntMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(BraidError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.n + j]
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on dimension mismatch; see [`IntMatrix::checked_add`].
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_add(rhs).expect("matrix dimensions agree")
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on dimension mismatch; see [`IntMatrix::checked_mul`].
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.n.max(1)).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// The 0/1 matrix `Q` with `Q(a, ρ(a)) = 1`, so that `Qᵀ M Q` is `M`
/// permuted by `ρ` and `Q⁻¹ = Qᵀ`.
pub fn permutation_similarity(p: &Permutation) -> IntMatrix {
    let mut q = IntMatrix::zeros(p.len());
    for a in 0..p.len() {
        q[(a, p.image(a))] = BigInt::one();
    }
    q
}

/// Integer polynomial with coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are trimmed.
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = deg == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    fn ones_off_diagonal(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, |i, j| BigInt::from((i != j) as i64))
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn sum_matrix() -> IntMatrix {
        mat(&[
            &[0, -3, 0, 0, 0],
            &[-3, 0, 0, 0, 0],
            &[0, 0, 0, 2, 2],
            &[0, 0, 2, 0, 2],
            &[0, 0, 2, 2, 0],
        ])
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(sum_matrix().determinant(), BigInt::from(-144));
        assert_eq!(ones_off_diagonal(5).determinant(), BigInt::from(4));
        assert_eq!(IntMatrix::zeros(3).determinant(), BigInt::zero());
        assert_eq!(mat(&[&[7]]).determinant(), BigInt::from(7));
    }

    #[test]
    fn determinant_needs_pivoting() {
        // zero leading entries in every column at some stage
        let m = mat(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-6));
        let singular = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(singular.determinant(), BigInt::zero());
    }

    #[test]
    fn determinant_large_entries_stay_exact() {
        let big = BigInt::from(10).pow(30);
        let m = IntMatrix::from_fn(2, |i, j| if i == j { big.clone() } else { BigInt::one() });
        assert_eq!(m.determinant(), &big * &big - 1);
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(IntMatrix::zeros(3).characteristic_polynomial(), poly(&[0, 0, 0, 1]));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).characteristic_polynomial(), poly(&[-1, 0, 1]));
        assert_eq!(ones_off_diagonal(3).characteristic_polynomial(), poly(&[-2, -3, 0, 1]));
        assert_eq!(mat(&[&[5]]).characteristic_polynomial(), poly(&[-5, 1]));
    }

    #[test]
    fn charpoly_of_upper_triangular_is_product_of_diagonal_factors() {
        let m = mat(&[&[1, 4, 5], &[0, 2, 6], &[0, 0, 3]]);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(m.characteristic_polynomial(), poly(&[-6, 11, -6, 1]));
    }

    #[test]
    fn charpoly_constant_term_matches_determinant() {
        let m = sum_matrix();
        let cp = m.characteristic_polynomial();
        assert_eq!(cp.degree(), Some(5));
        assert_eq!(cp.evaluate(&BigInt::zero()), -m.determinant());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(IntMatrix::zeros(4).rank(), 0);
        for n in 2..7 {
            assert_eq!(ones_off_diagonal(n).rank(), n);
        }
        assert_eq!(sum_matrix().rank(), 5);
        assert_eq!(mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
        assert_eq!(mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).rank(), 2);
    }

    #[test]
    fn similarity_witness_examples() {
        let id = Permutation::identity(3);
        assert_eq!(permutation_similarity(&id), IntMatrix::identity(3));
        let swap = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        assert_eq!(
            permutation_similarity(&swap),
            mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])
        );

        let rho = Permutation::from_one_based(&[2, 1, 4, 5, 3]).unwrap();
        let m = mat(&[
            &[0, -1, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0],
        ]);
        let expected = mat(&[
            &[0, 0, 0, 0, 0],
            &[-1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
        ]);
        let q = permutation_similarity(&rho);
        assert_eq!(&(&q.transpose() * &m) * &q, expected);
        assert_eq!(&q.transpose() * &q, IntMatrix::identity(5));
    }

    #[test]
    fn permuted_rejects_wrong_size() {
        let p = Permutation::identity(2);
        assert!(IntMatrix::zeros(3).permuted(&p).is_err());
    }

    #[test]
    fn from_rows_rejects_non_square() {
        assert!(IntMatrix::from_rows::<i64>(&[]).is_err());
        assert!(IntMatrix::from_rows(&[vec![1, 2]]).is_err());
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(poly(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(poly(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(poly(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[0, 2, -5]).to_string(), "-5x^2 + 2x");
    }

    #[test]
    fn matrix_display() {
        assert_eq!(mat(&[&[0, -1], &[10, 0]]).to_string(), "[ 0 -1]\n[10  0]");
    }
}
