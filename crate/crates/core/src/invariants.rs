//! Conjugation invariants built from the crossing matrix of the pure power
//! `w^|ρ|`, and the stabilization-invariant Q-determinant.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::crossing::{crossing_matrix, pure_power_sum_with_limit, CrossingMatrix};
use crate::error::Result;
use crate::linalg::{IntMatrix, IntPolynomial};
use crate::permutation::{Permutation, DEFAULT_MAX_ORDER};

/// `(|ρ|, P)`: the order of the braid permutation with the purified
/// determinant. Separates a braid from its pure power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PPair {
    pub order: u64,
    pub p_value: BigInt,
}

impl fmt::Display for PPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.order, self.p_value)
    }
}

/// Order of the permutation plus the characteristic polynomial of the
/// pure-power crossing matrix. Equal for conjugate braids.
///
/// Keys order by `order` first, then by coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugacyKey {
    pub order: u64,
    pub charpoly: IntPolynomial,
}

impl ConjugacyKey {
    /// `(order|c0,c1,...,cn)` with ascending coefficients.
    pub fn canonical(&self) -> String {
        let coeffs: Vec<String> = self
            .charpoly
            .coefficients()
            .iter()
            .map(ToString::to_string)
            .collect();
        format!("({}|{})", self.order, coeffs.join(","))
    }
}

impl fmt::Display for ConjugacyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// `P(w) = det C(w^|ρ|)`.
pub fn purified_determinant(word: &BraidWord) -> Result<BigInt> {
    Ok(pure_power_sum_with_limit(word, DEFAULT_MAX_ORDER)?.determinant())
}

pub fn p_pair(word: &BraidWord) -> Result<PPair> {
    let order = word.permutation().order()?;
    Ok(PPair {
        order,
        p_value: purified_determinant(word)?,
    })
}

/// `Q(w) = det(C(w) + I)`. Unchanged by stabilization, but not a
/// conjugation invariant.
pub fn q_determinant(word: &BraidWord) -> BigInt {
    crossing_matrix(word).plus_identity().determinant()
}

pub fn conjugacy_key(word: &BraidWord) -> Result<ConjugacyKey> {
    conjugacy_key_with_limit(word, DEFAULT_MAX_ORDER)
}

pub fn conjugacy_key_with_limit(word: &BraidWord, max_order: u64) -> Result<ConjugacyKey> {
    let order = word.permutation().order_with_limit(max_order)?;
    let pure = pure_power_sum_with_limit(word, max_order)?;
    Ok(ConjugacyKey {
        order,
        charpoly: pure.characteristic_polynomial(),
    })
}

/// Everything computed for one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub word: BraidWord,
    pub permutation: Permutation,
    pub order: u64,
    pub crossing: CrossingMatrix,
    pub pure_power: CrossingMatrix,
    pub p: BigInt,
    pub q: BigInt,
    pub charpoly: IntPolynomial,
    pub rank: usize,
}

impl InvariantReport {
    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn is_pure(&self) -> bool {
        self.order == 1
    }

    pub fn p_pair(&self) -> PPair {
        PPair {
            order: self.order,
            p_value: self.p.clone(),
        }
    }

    pub fn key(&self) -> ConjugacyKey {
        ConjugacyKey {
            order: self.order,
            charpoly: self.charpoly.clone(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson::from(self)).expect("report serializes")
    }

    /// Compact JSON with fields in schema order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ReportJson::from(self)).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&ReportJson::from(self)).expect("report serializes")
    }

    /// Plain-text table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, label: &str, value: &dyn fmt::Display| {
            out.push_str(&format!("{label:<12} {value}\n"));
        };
        line(&mut out, "strands", &self.strands());
        line(&mut out, "word", &self.word);
        line(&mut out, "permutation", &self.permutation);
        line(&mut out, "order", &self.order);
        line(&mut out, "pure", &self.is_pure());
        line(&mut out, "P", &self.p);
        line(&mut out, "PP", &self.p_pair());
        line(&mut out, "Q", &self.q);
        line(&mut out, "rank", &self.rank);
        line(&mut out, "charpoly", &self.charpoly);
        out.push_str("crossing matrix\n");
        out.push_str(&indent(&self.crossing.to_string()));
        out.push_str("pure power matrix\n");
        out.push_str(&indent(&self.pure_power.to_string()));
        out
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

pub fn invariant_report(word: &BraidWord) -> Result<InvariantReport> {
    invariant_report_with_limit(word, DEFAULT_MAX_ORDER)
}

pub fn invariant_report_with_limit(word: &BraidWord, max_order: u64) -> Result<InvariantReport> {
    let permutation = word.permutation();
    let order = permutation.order_with_limit(max_order)?;
    let crossing = crossing_matrix(word);
    let pure_power = pure_power_sum_with_limit(word, max_order)?;
    Ok(InvariantReport {
        word: word.clone(),
        permutation,
        order,
        q: crossing.plus_identity().determinant(),
        p: pure_power.determinant(),
        charpoly: pure_power.characteristic_polynomial(),
        rank: pure_power.rank(),
        crossing,
        pure_power,
    })
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    word: String,
    permutation: Vec<usize>,
    order: u64,
    matrix: Vec<Vec<String>>,
    pure_matrix: Vec<Vec<String>>,
    p: String,
    pp: (u64, String),
    q: String,
    charpoly: Vec<String>,
    rank: usize,
    is_pure: bool,
}

impl From<&InvariantReport> for ReportJson {
    fn from(r: &InvariantReport) -> Self {
        ReportJson {
            n: r.strands(),
            word: r.word.to_string(),
            permutation: r.permutation.one_based(),
            order: r.order,
            matrix: matrix_strings(&r.crossing),
            pure_matrix: matrix_strings(&r.pure_power),
            p: r.p.to_string(),
            pp: (r.order, r.p.to_string()),
            q: r.q.to_string(),
            charpoly: polynomial_strings(&r.charpoly),
            rank: r.rank,
            is_pure: r.is_pure(),
        }
    }
}

/// Row-major decimal strings.
pub fn matrix_strings(m: &IntMatrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

/// Ascending coefficients as decimal strings.
pub fn polynomial_strings(p: &IntPolynomial) -> Vec<String> {
    p.coefficients().iter().map(ToString::to_string).collect()
}
