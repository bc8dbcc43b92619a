//! Exhaustive classification of short words by [`ConjugacyKey`].
//!
//! Words landing in different buckets are certainly not conjugate. Words in
//! the same bucket may or may not be: the key is an invariant, not a
//! complete one (`σ₁²` and `σ₁⁻²` share a bucket, for instance).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::error::{BraidError, Result};
use crate::invariants::{conjugacy_key_with_limit, polynomial_strings, ConjugacyKey};

/// Upper bound on the number of words a single sieve run may enumerate.
pub const MAX_SIEVE_WORDS: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveBucket {
    pub key: ConjugacyKey,
    pub count: u64,
    /// Shortest word in the bucket, ties broken by token sequence.
    pub representative: BraidWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveResult {
    pub strands: usize,
    pub max_len: usize,
    pub words: u64,
    /// Sorted by key.
    pub buckets: Vec<SieveBucket>,
}

type Partial = BTreeMap<ConjugacyKey, (u64, BraidWord)>;

/// Enumerates every word of length `0..=max_len` over `±1..±(strands-1)`
/// and groups them by conjugacy key. The result does not depend on
/// `parallel`.
pub fn sieve(strands: usize, max_len: usize, max_order: u64, parallel: bool) -> Result<SieveResult> {
    if strands == 0 {
        return Err(BraidError::NoStrands);
    }
    let alphabet: Vec<Letter> = (1..strands)
        .rev()
        .map(Letter::negative)
        .chain((1..strands).map(Letter::positive))
        .collect();

    let mut words = 0u64;
    let mut merged = Partial::new();
    for len in 0..=max_len {
        let count = (alphabet.len() as u64)
            .checked_pow(len as u32)
            .filter(|&c| words.saturating_add(c) <= MAX_SIEVE_WORDS)
            .ok_or_else(|| {
                BraidError::OracleGuard(format!("more than {MAX_SIEVE_WORDS} words to enumerate"))
            })?;
        // one-strand braids only have the empty word
        if count == 0 {
            continue;
        }
        words += count;
        let decode = |index: u64| decode_word(&alphabet, strands, len, index);
        let partial = if parallel {
            (0..count)
                .into_par_iter()
                .try_fold(Partial::new, |mut acc, index| {
                    insert(&mut acc, decode(index), max_order)?;
                    Ok::<_, BraidError>(acc)
                })
                .try_reduce(Partial::new, |a, b| Ok(merge(a, b)))?
        } else {
            let mut acc = Partial::new();
            for index in 0..count {
                insert(&mut acc, decode(index), max_order)?;
            }
            acc
        };
        merged = merge(merged, partial);
    }

    let buckets = merged
        .into_iter()
        .map(|(key, (count, representative))| SieveBucket {
            key,
            count,
            representative,
        })
        .collect();
    Ok(SieveResult {
        strands,
        max_len,
        words,
        buckets,
    })
}

/// Most significant letter first, so increasing indices enumerate words of
/// one length in token-lexicographic order.
fn decode_word(alphabet: &[Letter], strands: usize, len: usize, mut index: u64) -> BraidWord {
    let base = alphabet.len() as u64;
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push(alphabet[(index % base) as usize]);
        index /= base;
    }
    letters.reverse();
    BraidWord::new(strands, letters).expect("alphabet respects the strand count")
}

fn insert(acc: &mut Partial, word: BraidWord, max_order: u64) -> Result<()> {
    let key = conjugacy_key_with_limit(&word, max_order)?;
    acc.entry(key)
        .and_modify(|(count, rep)| {
            *count += 1;
            if precedes(&word, rep) {
                *rep = word.clone();
            }
        })
        .or_insert((1, word));
    Ok(())
}

fn merge(mut a: Partial, b: Partial) -> Partial {
    for (key, (count, rep)) in b {
        a.entry(key)
            .and_modify(|(c, r)| {
                *c += count;
                if precedes(&rep, r) {
                    *r = rep.clone();
                }
            })
            .or_insert((count, rep));
    }
    a
}

fn precedes(a: &BraidWord, b: &BraidWord) -> bool {
    (a.len(), a.letters()) < (b.len(), b.letters())
}

impl SieveResult {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for b in &self.buckets {
            out.push_str(&format!(
                "{}\t{}\t\"{}\"\n",
                b.key.canonical(),
                b.count,
                b.representative
            ));
        }
        out.push_str(&format!(
            "strands {} max-len {}: {} words in {} buckets\n",
            self.strands,
            self.max_len,
            self.words,
            self.buckets.len()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let view = SieveJson {
            n: self.strands,
            max_len: self.max_len,
            words: self.words,
            bucket_count: self.buckets.len(),
            buckets: self
                .buckets
                .iter()
                .map(|b| BucketJson {
                    key: b.key.canonical(),
                    order: b.key.order,
                    charpoly: polynomial_strings(&b.key.charpoly),
                    count: b.count,
                    representative: b.representative.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&view).expect("sieve result serializes")
    }
}

#[derive(Serialize)]
struct SieveJson {
    n: usize,
    max_len: usize,
    words: u64,
    bucket_count: usize,
    buckets: Vec<BucketJson>,
}

#[derive(Serialize)]
struct BucketJson {
    key: String,
    order: u64,
    charpoly: Vec<String>,
    count: u64,
    representative: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::DEFAULT_MAX_ORDER;

    fn summary(r: &SieveResult) -> Vec<(String, u64, String)> {
        r.buckets
            .iter()
            .map(|b| (b.key.canonical(), b.count, b.representative.to_string()))
            .collect()
    }

    #[test]
    fn two_strands_up_to_length_two() {
        let r = sieve(2, 2, DEFAULT_MAX_ORDER, false).unwrap();
        assert_eq!(r.words, 7);
        assert_eq!(
            summary(&r),
            vec![
                ("(1|-1,0,1)".to_string(), 2, "-1 -1".to_string()),
                ("(1|0,0,1)".to_string(), 3, "".to_string()),
                ("(2|-1,0,1)".to_string(), 2, "-1".to_string()),
            ]
        );
    }

    #[test]
    fn length_zero_has_one_bucket() {
        let r = sieve(2, 0, DEFAULT_MAX_ORDER, false).unwrap();
        assert_eq!(r.words, 1);
        assert_eq!(summary(&r), vec![("(1|0,0,1)".to_string(), 1, "".to_string())]);
    }

    #[test]
    fn one_strand_only_has_the_empty_word() {
        let r = sieve(1, 3, DEFAULT_MAX_ORDER, true).unwrap();
        assert_eq!(r.words, 1);
        assert_eq!(r.buckets.len(), 1);
    }

    #[test]
    fn parallel_matches_serial() {
        let a = sieve(3, 4, DEFAULT_MAX_ORDER, false).unwrap();
        let b = sieve(3, 4, DEFAULT_MAX_ORDER, true).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.words, 1 + 4 + 16 + 64 + 256);
        assert_eq!(a.buckets.iter().map(|b| b.count).sum::<u64>(), a.words);
    }

    #[test]
    fn order_guard_is_reported() {
        assert!(matches!(
            sieve(3, 1, 1, false),
            Err(BraidError::OrderLimitExceeded { limit: 1 })
        ));
    }

    #[test]
    fn cyclic_rotations_share_buckets() {
        let r = sieve(3, 3, DEFAULT_MAX_ORDER, true).unwrap();
        let key_of = |text: &str| {
            conjugacy_key_with_limit(&BraidWord::parse(text, Some(3)).unwrap(), DEFAULT_MAX_ORDER)
                .unwrap()
        };
        for (a, b) in [("1 2", "2 1"), ("1 -2 2", "-2 2 1"), ("-1 -1 2", "2 -1 -1")] {
            assert_eq!(key_of(a), key_of(b));
            assert!(r.buckets.iter().any(|bucket| bucket.key == key_of(a)));
        }
    }
}
