//! Braid words over the Artin generators.
//!
//! A word is a strand count plus a sequence of letters `σᵢ^±1`. The text form
//! is a list of signed integers separated by whitespace or commas: `-2 1 2`
//! is `σ₂⁻¹ σ₁ σ₂`.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::permutation::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One generator `σᵢ^ε`, with `index = i ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: usize,
    sign: Sign,
}

impl Letter {
    /// Panics if `index` is zero.
    pub fn new(index: usize, sign: Sign) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Letter { index, sign }
    }

    pub fn positive(index: usize) -> Self {
        Letter::new(index, Sign::Positive)
    }

    pub fn negative(index: usize) -> Self {
        Letter::new(index, Sign::Negative)
    }

    /// Decodes a signed token: `k` is `σ_|k|^sign(k)`.
    pub fn from_token(token: i64) -> Result<Self> {
        if token == 0 {
            return Err(BraidError::ZeroToken);
        }
        let sign = if token > 0 { Sign::Positive } else { Sign::Negative };
        let index = usize::try_from(token.unsigned_abs())
            .map_err(|_| BraidError::InvalidToken(token.to_string()))?;
        Ok(Letter { index, sign })
    }

    pub fn token(self) -> i64 {
        self.index as i64 * self.sign.as_i64()
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    fn shifted(self, offset: usize) -> Self {
        Letter {
            index: self.index + offset,
            sign: self.sign,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Letters order by their signed token, so `-2 < -1 < 1 < 2`.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.token().cmp(&other.token())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// A braid word on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index >= strands) {
            return Err(BraidError::GeneratorOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word on `strands` strands.
    pub fn trivial(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn from_tokens(strands: usize, tokens: &[i64]) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|&t| Letter::from_token(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// Parses the signed-integer text form.
    ///
    /// Without an explicit strand count the smallest braid group containing
    /// the word is used, with a floor of two strands.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let tokens = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| BraidError::InvalidToken(t.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let letters = tokens
            .into_iter()
            .map(Letter::from_token)
            .collect::<Result<Vec<_>>>()?;
        let strands = match strands {
            Some(n) => n,
            None => letters.iter().map(|l| l.index + 1).max().unwrap_or(0).max(2),
        };
        Self::new(strands, letters)
    }

    /// The half twist `Δₙ = (σ₁)(σ₂σ₁)…(σₙ₋₁…σ₁)`, in which every pair of
    /// strands crosses exactly once, positively.
    pub fn half_twist(strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for top in 1..strands {
            letters.extend((1..=top).rev().map(Letter::positive));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn tokens(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.token()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed word with every exponent negated.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The product `self · other`: `self` on top, `other` below.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn power(&self, k: usize) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// `a⁻¹ · self · a`.
    pub fn conjugate(&self, a: &BraidWord) -> Result<Self> {
        a.inverse().concat(self)?.concat(a)
    }

    /// Markov stabilization `B ↦ B σₙ^sign` onto `n + 1` strands.
    pub fn stabilize(&self, sign: Sign) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Side-by-side juxtaposition: `other` is placed to the right of `self`
    /// and its generators are shifted by `self.strands()`. No strand of one
    /// factor crosses a strand of the other.
    pub fn direct_sum(&self, other: &BraidWord) -> Self {
        let offset = self.strands;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|l| l.shifted(offset)));
        BraidWord {
            strands: self.strands + other.strands,
            letters,
        }
    }

    /// The braid permutation: strand starting at position `i` ends at
    /// position `ρ(i)`.
    pub fn permutation(&self) -> Permutation {
        // strand_at[p] is the strand currently occupying position p
        let mut strand_at: Vec<usize> = (0..self.strands).collect();
        for letter in &self.letters {
            strand_at.swap(letter.index - 1, letter.index);
        }
        let mut images = vec![0; self.strands];
        for (position, &strand) in strand_at.iter().enumerate() {
            images[strand] = position;
        }
        Permutation::from_images(images).expect("strand tracking yields a bijection")
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub(crate) fn with_letters(&self, letters: Vec<Letter>) -> Self {
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Some(n)).unwrap()
    }

    #[test]
    fn parse_examples() {
        let w = word("-2 1 2", 3);
        assert_eq!(
            w.letters(),
            &[Letter::negative(2), Letter::positive(1), Letter::positive(2)]
        );
        assert!(word("", 3).is_empty());
        assert_eq!(word("", 3).strands(), 3);
        assert_eq!(
            BraidWord::parse("3", Some(3)),
            Err(BraidError::GeneratorOutOfRange { index: 3, strands: 3 })
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            BraidWord::parse("1 x", None),
            Err(BraidError::InvalidToken("x".into()))
        );
        assert_eq!(BraidWord::parse("1 0", None), Err(BraidError::ZeroToken));
        assert_eq!(BraidWord::parse("", Some(0)), Err(BraidError::NoStrands));
        assert!(BraidWord::parse("1.5", None).is_err());
    }

    #[test]
    fn parse_accepts_commas_and_infers_strands() {
        let w = BraidWord::parse("-1, 4,3", None).unwrap();
        assert_eq!(w.strands(), 5);
        assert_eq!(w.to_string(), "-1 4 3");
        assert_eq!(BraidWord::parse("", None).unwrap().strands(), 2);
        assert_eq!(BraidWord::parse("  ", Some(1)).unwrap().strands(), 1);
    }

    #[test]
    fn render_examples() {
        assert_eq!(word("-2 1 2", 3).to_string(), "-2 1 2");
        assert_eq!(word("", 3).to_string(), "");
        assert_eq!(word("1 1", 2).to_string(), "1 1");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(word("-2 1 2", 3).inverse().to_string(), "-2 -1 2");
        assert_eq!(word("", 3).inverse().to_string(), "");
        assert_eq!(word("1", 2).inverse().to_string(), "-1");
    }

    #[test]
    fn concat_examples() {
        let w = word("1", 3).concat(&word("2", 3)).unwrap();
        assert_eq!(w.to_string(), "1 2");
        let v = word("-2 1", 3);
        assert_eq!(word("", 3).concat(&v).unwrap(), v);
        assert_eq!(word("-1", 2).concat(&word("1", 2)).unwrap().to_string(), "-1 1");
        assert_eq!(
            word("1", 2).concat(&word("1", 3)),
            Err(BraidError::StrandMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn power_examples() {
        assert_eq!(word("1", 2).power(2).to_string(), "1 1");
        assert!(word("1 2", 3).power(0).is_empty());
        assert_eq!(word("-1 2", 3).power(3).to_string(), "-1 2 -1 2 -1 2");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(word("1", 3).conjugate(&word("2", 3)).unwrap().to_string(), "-2 1 2");
        let w = word("1 -2", 3);
        assert_eq!(w.conjugate(&word("", 3)).unwrap(), w);
        assert_eq!(word("1", 2).conjugate(&word("1", 2)).unwrap().to_string(), "-1 1 1");
    }

    #[test]
    fn stabilize_examples() {
        let s = word("1", 2).stabilize(Sign::Positive);
        assert_eq!((s.strands(), s.to_string()), (3, "1 2".to_string()));
        let s = word("", 1).stabilize(Sign::Positive);
        assert_eq!((s.strands(), s.to_string()), (2, "1".to_string()));
        let s = word("-2 1", 3).stabilize(Sign::Negative);
        assert_eq!((s.strands(), s.to_string()), (4, "-2 1 -3".to_string()));
    }

    #[test]
    fn direct_sum_examples() {
        let s = word("1 1", 2).direct_sum(&word("1 1", 2));
        assert_eq!((s.strands(), s.to_string()), (4, "1 1 3 3".to_string()));
        let s = word("-1 2", 3).direct_sum(&word("", 2));
        assert_eq!((s.strands(), s.to_string()), (5, "-1 2".to_string()));
        let s = word("1", 2).direct_sum(&word("2", 3));
        assert_eq!((s.strands(), s.to_string()), (5, "1 4".to_string()));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(word("1", 3).permutation().one_based(), vec![2, 1, 3]);
        assert_eq!(word("-2 1 2", 3).permutation().one_based(), vec![3, 2, 1]);
        assert_eq!(word("-1 4 3", 5).permutation().one_based(), vec![2, 1, 4, 5, 3]);
        assert!(word("", 1).permutation().is_identity());
    }

    #[test]
    fn half_twist_words() {
        assert_eq!(BraidWord::half_twist(1).unwrap().to_string(), "");
        assert_eq!(BraidWord::half_twist(2).unwrap().to_string(), "1");
        assert_eq!(BraidWord::half_twist(4).unwrap().to_string(), "1 2 1 3 2 1");
        let p = BraidWord::half_twist(5).unwrap().permutation();
        assert_eq!(p.one_based(), vec![5, 4, 3, 2, 1]);
    }

    #[test]
    fn letters_order_by_token() {
        let mut ls = [Letter::positive(2), Letter::negative(1), Letter::positive(1), Letter::negative(2)];
        ls.sort();
        let tokens: Vec<i64> = ls.iter().map(|l| l.token()).collect();
        assert_eq!(tokens, vec![-2, -1, 1, 2]);
    }
}
