//! Rewriting moves that preserve the braid a word represents: free
//! cancellation and insertion, far commutation and the braid relation.
//! Positions are 1-based indices into the letter sequence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Letter, Sign};
use crate::error::{BraidError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveSpec {
    /// Delete the mutually inverse pair at `pos`, `pos + 1`.
    FreeCancel { pos: usize },
    /// Insert `letter letter⁻¹` so that `letter` lands at `pos`.
    FreeInsert { pos: usize, letter: Letter },
    /// `σᵢ^a σⱼ^b → σⱼ^b σᵢ^a` for `|i - j| > 1`.
    FarCommute { pos: usize },
    /// `σᵢ^ε σⱼ^ε σᵢ^ε → σⱼ^ε σᵢ^ε σⱼ^ε` for `|i - j| = 1`.
    BraidMove { pos: usize },
}

impl MoveSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            MoveSpec::FreeCancel { .. } => "FreeCancel",
            MoveSpec::FreeInsert { .. } => "FreeInsert",
            MoveSpec::FarCommute { .. } => "FarCommute",
            MoveSpec::BraidMove { .. } => "BraidMove",
        }
    }

    fn pos(&self) -> usize {
        match *self {
            MoveSpec::FreeCancel { pos }
            | MoveSpec::FreeInsert { pos, .. }
            | MoveSpec::FarCommute { pos }
            | MoveSpec::BraidMove { pos } => pos,
        }
    }
}

/// Applies one move, failing if its pattern does not match at the position.
pub fn apply_move(word: &BraidWord, mv: MoveSpec) -> Result<BraidWord> {
    let mismatch = || BraidError::MoveMismatch {
        kind: mv.kind(),
        pos: mv.pos(),
    };
    let letters = word.letters();
    let pos = mv.pos();
    if pos == 0 {
        return Err(mismatch());
    }
    let at = pos - 1;
    let window = |len: usize| letters.get(at..at + len).ok_or_else(mismatch);

    let mut out = letters.to_vec();
    match mv {
        MoveSpec::FreeCancel { .. } => {
            let w = window(2)?;
            if w[0].inverse() != w[1] {
                return Err(mismatch());
            }
            out.drain(at..at + 2);
        }
        MoveSpec::FreeInsert { letter, .. } => {
            if at > letters.len() {
                return Err(mismatch());
            }
            if letter.index() >= word.strands() {
                return Err(BraidError::GeneratorOutOfRange {
                    index: letter.index(),
                    strands: word.strands(),
                });
            }
            out.splice(at..at, [letter, letter.inverse()]);
        }
        MoveSpec::FarCommute { .. } => {
            let w = window(2)?;
            if w[0].index().abs_diff(w[1].index()) <= 1 {
                return Err(mismatch());
            }
            out.swap(at, at + 1);
        }
        MoveSpec::BraidMove { .. } => {
            let w = window(3)?;
            let (a, b) = (w[0], w[1]);
            if a != w[2] || a.sign() != b.sign() || a.index().abs_diff(b.index()) != 1 {
                return Err(mismatch());
            }
            out[at] = b;
            out[at + 1] = a;
            out[at + 2] = b;
        }
    }
    Ok(word.with_letters(out))
}

/// Every cancellation, far commutation and braid move whose pattern matches
/// somewhere in `word`. Insertions are always applicable and not listed.
pub fn applicable_moves(word: &BraidWord) -> Vec<MoveSpec> {
    let letters = word.letters();
    let mut moves = Vec::new();
    for at in 0..letters.len() {
        let pos = at + 1;
        if at + 1 < letters.len() {
            let (a, b) = (letters[at], letters[at + 1]);
            if a.inverse() == b {
                moves.push(MoveSpec::FreeCancel { pos });
            }
            if a.index().abs_diff(b.index()) > 1 {
                moves.push(MoveSpec::FarCommute { pos });
            }
        }
        if at + 2 < letters.len() {
            let (a, b, c) = (letters[at], letters[at + 1], letters[at + 2]);
            if a == c && a.sign() == b.sign() && a.index().abs_diff(b.index()) == 1 {
                moves.push(MoveSpec::BraidMove { pos });
            }
        }
    }
    moves
}

/// Applies `steps` randomly chosen moves. At each step the candidates are
/// the applicable moves plus one random free insertion, chosen uniformly.
/// Deterministic for a fixed seed. One-strand words have no moves and are
/// returned unchanged.
pub fn random_equivalent(word: &BraidWord, steps: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = word.clone();
    if word.strands() < 2 {
        return current;
    }
    for _ in 0..steps {
        let mut candidates = applicable_moves(&current);
        let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
        candidates.push(MoveSpec::FreeInsert {
            pos: rng.gen_range(1..=current.len() + 1),
            letter: Letter::new(rng.gen_range(1..current.strands()), sign),
        });
        let mv = *candidates.choose(&mut rng).expect("insertion is always a candidate");
        current = apply_move(&current, mv).expect("candidate moves match");
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Some(n)).unwrap()
    }

    #[test]
    fn move_examples() {
        let w = apply_move(&word("1 -1 2", 3), MoveSpec::FreeCancel { pos: 1 }).unwrap();
        assert_eq!(w.to_string(), "2");
        let w = apply_move(&word("1 2 1", 3), MoveSpec::BraidMove { pos: 1 }).unwrap();
        assert_eq!(w.to_string(), "2 1 2");
        let w = apply_move(&word("1 3", 4), MoveSpec::FarCommute { pos: 1 }).unwrap();
        assert_eq!(w.to_string(), "3 1");
        let w = apply_move(
            &word("1 2", 3),
            MoveSpec::FreeInsert { pos: 3, letter: Letter::negative(2) },
        )
        .unwrap();
        assert_eq!(w.to_string(), "1 2 -2 2");
    }

    #[test]
    fn negative_braid_move() {
        let w = apply_move(&word("-2 -1 -2", 3), MoveSpec::BraidMove { pos: 1 }).unwrap();
        assert_eq!(w.to_string(), "-1 -2 -1");
    }

    #[test]
    fn mismatches_are_rejected() {
        let cases = [
            ("1 3 1", MoveSpec::BraidMove { pos: 1 }),
            ("1 -2 1", MoveSpec::BraidMove { pos: 1 }),
            ("1 2", MoveSpec::FarCommute { pos: 1 }),
            ("1 1", MoveSpec::FreeCancel { pos: 1 }),
            ("1 -1", MoveSpec::FreeCancel { pos: 2 }),
            ("1 -1", MoveSpec::FreeCancel { pos: 0 }),
            ("1 2 1", MoveSpec::BraidMove { pos: 2 }),
        ];
        for (text, mv) in cases {
            assert!(
                matches!(apply_move(&word(text, 4), mv), Err(BraidError::MoveMismatch { .. })),
                "{text} {mv:?}"
            );
        }
        let bad_insert = MoveSpec::FreeInsert { pos: 4, letter: Letter::positive(1) };
        assert!(apply_move(&word("1 2", 3), bad_insert).is_err());
        let out_of_range = MoveSpec::FreeInsert { pos: 1, letter: Letter::positive(3) };
        assert!(apply_move(&word("1 2", 3), out_of_range).is_err());
    }

    #[test]
    fn applicable_moves_all_apply() {
        let w = word("1 -1 3 1 2 1 -3 -2 -3", 4);
        let moves = applicable_moves(&w);
        assert!(moves.contains(&MoveSpec::FreeCancel { pos: 1 }));
        assert!(moves.contains(&MoveSpec::FarCommute { pos: 2 }));
        assert!(moves.contains(&MoveSpec::BraidMove { pos: 4 }));
        assert!(moves.contains(&MoveSpec::BraidMove { pos: 7 }));
        for mv in moves {
            apply_move(&w, mv).unwrap();
        }
    }

    #[test]
    fn random_equivalent_zero_steps_is_identity() {
        let w = word("-1 4 3", 5);
        assert_eq!(random_equivalent(&w, 0, 7), w);
    }

    #[test]
    fn random_equivalent_single_braid_move() {
        let w = word("1 2 1", 3);
        let hit = (0..200u64)
            .map(|seed| random_equivalent(&w, 1, seed))
            .find(|v| v.to_string() == "2 1 2");
        assert!(hit.is_some());
    }

    #[test]
    fn random_equivalent_is_deterministic_and_preserves_permutation() {
        let w = word("1 -2 3 2 1", 4);
        for seed in 0..50 {
            let a = random_equivalent(&w, 20, seed);
            assert_eq!(a, random_equivalent(&w, 20, seed));
            assert_eq!(a.permutation(), w.permutation());
        }
    }
}
