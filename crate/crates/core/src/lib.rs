//! Exact crossing-matrix invariants of braids.
//!
//! A braid word determines a crossing matrix `C` (signed counts of strand
//! `i` passing over strand `j`) and a braid permutation `ρ`. From these the
//! crate computes
//!
//! * the purified determinant `P = det C(w^|ρ|)`, a conjugation invariant,
//! * the P-pair `(|ρ|, P)`,
//! * the Q-determinant `det(C + I)`, invariant under Markov stabilization,
//! * the characteristic polynomial and rank of `C(w^|ρ|)`.
//!
//! All arithmetic is exact over arbitrary-precision integers.
//!
//! ```
//! use braidinv::{invariants, BraidWord};
//!
//! let w = BraidWord::parse("-1 4 3", Some(5)).unwrap();
//! let pp = invariants::p_pair(&w).unwrap();
//! assert_eq!(pp.order, 6);
//! assert_eq!(pp.p_value, (-144).into());
//! ```

pub mod braid;
pub mod crossing;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod moves;
pub mod oracles;
pub mod permutation;
pub mod sample;
pub mod sieve;
pub mod verify;

pub use braid::{BraidWord, Letter, Sign};
pub use crossing::CrossingMatrix;
pub use error::{BraidError, Result};
pub use invariants::{ConjugacyKey, InvariantReport, PPair};
pub use linalg::{IntMatrix, IntPolynomial};
pub use permutation::{Permutation, DEFAULT_MAX_ORDER};
