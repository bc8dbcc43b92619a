//! Random inputs for property checks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{BraidWord, Letter, Sign};
use crate::crossing::realize_pure;
use crate::linalg::IntMatrix;
use crate::permutation::Permutation;

/// A word on `strands` strands (at least 2) with length uniform in
/// `0..=max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, strands, len)
}

pub fn random_word_of_len<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2, "random words need at least two strands");
    let letters = (0..len).map(|_| random_letter(rng, strands)).collect();
    BraidWord::new(strands, letters).expect("indices drawn below the strand count")
}

pub fn random_letter<R: Rng + ?Sized>(rng: &mut R, strands: usize) -> Letter {
    let sign = if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    };
    Letter::new(rng.gen_range(1..strands), sign)
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn random_symmetric_zero_diagonal<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    bound: i64,
) -> IntMatrix {
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = BigInt::from(rng.gen_range(-bound..=bound));
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// A pure word realizing a random symmetric zero-diagonal matrix.
pub fn random_pure_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, bound: i64) -> BraidWord {
    realize_pure(&random_symmetric_zero_diagonal(rng, strands, bound))
        .expect("symmetric zero-diagonal input")
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}
