//! Seeded randomized checks of every algebraic property the library relies
//! on. Each property draws from its own ChaCha stream, so adding or
//! reordering properties does not perturb the inputs of the others.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Letter, Sign};
use crate::crossing::{
    crossing_matrix, product_crossing_matrix, pure_power_sum, realize_pure, CrossingMatrix,
};
use crate::error::BraidError;
use crate::invariants::{conjugacy_key, invariant_report, p_pair, purified_determinant, q_determinant};
use crate::linalg::IntMatrix;
use crate::moves::{apply_move, random_equivalent, MoveSpec};
use crate::oracles::{
    direct_power_matrix, naive_characteristic_polynomial, naive_determinant, naive_rank,
    similarity_witness_check,
};
use crate::permutation::Permutation;
use crate::sample::{
    random_matrix, random_permutation, random_pure_word,
    random_symmetric_zero_diagonal, random_word,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Strand counts are drawn uniformly from `2..=max_strands`.
    pub max_strands: usize,
    pub trials: u64,
    pub seed: u64,
    pub max_len: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_strands: 4,
            trials: 100,
            seed: 0,
            max_len: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    /// Trials whose input hit the order or oracle cost guard.
    pub skipped: u64,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failed == 0)
    }

    pub fn render_text(&self) -> String {
        let width = self.outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for o in &self.outcomes {
            let status = if o.failed == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {:<width$} passed {:>6} failed {:>4} skipped {:>4}",
                o.name, o.passed, o.failed, o.skipped
            );
            if let Some(example) = &o.counterexample {
                let _ = writeln!(out, "     counterexample: {example}");
            }
        }
        let failed = self.outcomes.iter().filter(|o| o.failed > 0).count();
        let _ = writeln!(
            out,
            "{} properties, {} failing",
            self.outcomes.len(),
            failed
        );
        out
    }
}

enum Trial {
    Pass,
    Skip,
    Fail(String),
}

impl From<Result<(), String>> for Trial {
    fn from(r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Trial::Pass,
            Err(msg) => Trial::Fail(msg),
        }
    }
}

type Check = fn(&mut ChaCha8Rng, &VerifyConfig) -> Trial;

struct Property {
    name: &'static str,
    /// Deterministic checks run once instead of once per trial.
    fixed: bool,
    check: Check,
}

const fn random(name: &'static str, check: Check) -> Property {
    Property { name, fixed: false, check }
}

const fn fixed(name: &'static str, check: Check) -> Property {
    Property { name, fixed: true, check }
}

const PROPERTIES: &[Property] = &[
    random("parse-render-roundtrip", parse_render_roundtrip),
    random("permutation-of-product", permutation_of_product),
    random("permutation-of-inverse", permutation_of_inverse),
    random("permutation-order-minimal", permutation_order_minimal),
    random("moves-preserve-permutation", moves_preserve_permutation),
    random("direct-sum-layers-separate", direct_sum_layers_separate),
    random("product-formula", product_formula),
    random("relation-invariance", relation_invariance),
    random("pure-crossing-symmetric", pure_crossing_symmetric),
    random("realize-pure-roundtrip", realize_pure_roundtrip),
    random("single-conjugation-transposes", single_conjugation_transposes),
    random("pure-power-sum-vs-tracing", pure_power_sum_vs_tracing),
    random("inverse-cancels-crossings", inverse_cancels_crossings),
    random("determinant-permutation-invariant", determinant_permutation_invariant),
    random("charpoly-permutation-invariant", charpoly_permutation_invariant),
    random("charpoly-constant-term", charpoly_constant_term),
    random("charpoly-vs-interpolation", charpoly_vs_interpolation),
    random("determinant-vs-cofactor", determinant_vs_cofactor),
    random("rank-vs-minors", rank_vs_minors),
    random("similarity-witness", similarity_witness),
    random("trace-property", trace_property),
    random("conjugation-invariance", conjugation_invariance),
    random("rewriting-invariance", rewriting_invariance),
    random("layered-multiplicativity", layered_multiplicativity),
    random("q-stabilization", q_stabilization),
    random("pure-power-sum-symmetric", pure_power_sum_symmetric),
    fixed("half-twist-closed-form", half_twist_closed_form),
    fixed("q-not-conjugation-invariant", q_not_conjugation_invariant),
];

/// Names of all properties, in run order.
pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.name).collect()
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let outcomes = PROPERTIES
        .iter()
        .enumerate()
        .map(|(stream, property)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(stream as u64);
            let trials = if property.fixed {
                config.trials.min(1)
            } else {
                config.trials
            };
            let mut outcome = PropertyOutcome {
                name: property.name,
                passed: 0,
                failed: 0,
                skipped: 0,
                counterexample: None,
            };
            for _ in 0..trials {
                match (property.check)(&mut rng, config) {
                    Trial::Pass => outcome.passed += 1,
                    Trial::Skip => outcome.skipped += 1,
                    Trial::Fail(msg) => {
                        outcome.failed += 1;
                        outcome.counterexample.get_or_insert(msg);
                    }
                }
            }
            outcome
        })
        .collect();
    VerifyReport { outcomes }
}

fn strands(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> usize {
    rng.gen_range(2..=config.max_strands.max(2))
}

fn word(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> BraidWord {
    let n = strands(rng, config);
    random_word(rng, n, config.max_len)
}

fn word_pair(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> (BraidWord, BraidWord) {
    let n = strands(rng, config);
    (random_word(rng, n, config.max_len), random_word(rng, n, config.max_len))
}

/// Small matrices for the cofactor oracles, which cap the dimension.
fn oracle_dim(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> usize {
    rng.gen_range(1..=config.max_strands.clamp(1, 6))
}

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Runs `f`, turning guard errors into skips and other errors into
/// failures.
fn guarded(f: impl FnOnce() -> Result<Result<(), String>, BraidError>) -> Trial {
    match f() {
        Ok(r) => r.into(),
        Err(BraidError::OrderLimitExceeded { .. } | BraidError::OracleGuard(_)) => Trial::Skip,
        Err(e) => Trial::Fail(e.to_string()),
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn show(w: &BraidWord) -> String {
    format!("n={} \"{}\"", w.strands(), w)
}

fn parse_render_roundtrip(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    let text = w.to_string();
    let back = BraidWord::parse(&text, Some(w.strands()));
    expect(back.as_ref() == Ok(&w), || show(&w)).into()
}

fn permutation_of_product(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (a, b) = word_pair(rng, config);
    guarded(|| {
        let lhs = a.concat(&b)?.permutation();
        let rhs = a.permutation().then(&b.permutation())?;
        Ok(expect(lhs == rhs, || format!("{} · {}", show(&a), show(&b))))
    })
}

fn permutation_of_inverse(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    expect(w.inverse().permutation() == w.permutation().inverse(), || show(&w)).into()
}

fn permutation_order_minimal(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    guarded(|| {
        let p = w.permutation();
        let order = p.order()?;
        let n = p.len() as u64;
        let factorial: u64 = (1..=n).product();
        let minimal = (1..order).all(|l| !p.pow(l).is_identity());
        Ok(expect(
            p.pow(order).is_identity() && minimal && factorial.is_multiple_of(order),
            || format!("{} order {order}", show(&w)),
        ))
    })
}

fn moves_preserve_permutation(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    let seed = rng.gen();
    let v = random_equivalent(&w, 12, seed);
    expect(v.permutation() == w.permutation(), || {
        format!("{} -> {}", show(&w), show(&v))
    })
    .into()
}

fn direct_sum_layers_separate(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (a, b) = (word(rng, config), word(rng, config));
    let s = a.direct_sum(&b);
    let split = a.strands();
    let c = crossing_matrix(&s);
    let no_cross = (0..split).all(|i| {
        (split..s.strands()).all(|j| c[(i, j)].is_zero() && c[(j, i)].is_zero())
    });
    expect(
        s.letters().iter().all(|l| l.index() != split) && no_cross,
        || format!("{} ⊕ {}", show(&a), show(&b)),
    )
    .into()
}

fn product_formula(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (a, b) = word_pair(rng, config);
    guarded(|| {
        let direct = crossing_matrix(&a.concat(&b)?);
        let predicted = product_crossing_matrix(&a, &b)?;
        Ok(expect(direct == predicted, || format!("{} · {}", show(&a), show(&b))))
    })
}

fn relation_invariance(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    let v = random_equivalent(&w, 16, rng.gen());
    expect(crossing_matrix(&w) == crossing_matrix(&v), || {
        format!("{} -> {}", show(&w), show(&v))
    })
    .into()
}

fn pure_crossing_symmetric(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    // random words are rarely pure, so the pure power is checked as well
    guarded(|| {
        let order = w.permutation().order()?;
        let candidates = [w.clone(), w.power(order as usize)];
        let bad = candidates
            .iter()
            .find(|c| c.is_pure() && !crossing_matrix(c).is_symmetric());
        Ok(expect(bad.is_none(), || show(bad.unwrap())))
    })
}

fn realize_pure_roundtrip(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n = strands(rng, config);
    let m = random_symmetric_zero_diagonal(rng, n, 3);
    guarded(|| {
        let w = realize_pure(&m)?;
        Ok(expect(w.is_pure() && *crossing_matrix(&w) == m, || {
            format!("matrix {m:?}")
        }))
    })
}

fn single_conjugation_transposes(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n = strands(rng, config);
    let w = random_pure_word(rng, n, 2);
    let i = rng.gen_range(1..n);
    let letter = Letter::new(i, sign(rng));
    guarded(|| {
        let conjugator = BraidWord::new(n, vec![letter.inverse()])?;
        let conjugated = w.conjugate(&conjugator)?;
        let tau = Permutation::adjacent_transposition(n, i)?;
        let expected = crossing_matrix(&w).permuted(&tau)?;
        Ok(expect(crossing_matrix(&conjugated) == expected, || {
            format!("{} conjugated by σ{}^{}", show(&w), i, letter.sign().as_i64())
        }))
    })
}

fn pure_power_sum_vs_tracing(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    guarded(|| {
        let summed = pure_power_sum(&w)?.into_matrix();
        let traced = direct_power_matrix(&w)?;
        Ok(expect(summed == traced, || show(&w)))
    })
}

fn inverse_cancels_crossings(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    guarded(|| {
        let c = crossing_matrix(&w.concat(&w.inverse())?);
        Ok(expect(c.is_zero(), || show(&w)))
    })
}

fn matrix_and_perm(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> (IntMatrix, Permutation) {
    let n = oracle_dim(rng, config);
    (random_matrix(rng, n, 9), random_permutation(rng, n))
}

fn determinant_permutation_invariant(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (m, p) = matrix_and_perm(rng, config);
    guarded(|| {
        let moved = m.permuted(&p)?;
        Ok(expect(moved.determinant() == m.determinant(), || {
            format!("{m:?} by {p}")
        }))
    })
}

fn charpoly_permutation_invariant(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (m, p) = matrix_and_perm(rng, config);
    guarded(|| {
        let moved = m.permuted(&p)?;
        Ok(expect(
            moved.characteristic_polynomial() == m.characteristic_polynomial(),
            || format!("{m:?} by {p}"),
        ))
    })
}

fn charpoly_constant_term(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n = oracle_dim(rng, config);
    let m = random_matrix(rng, n, 9);
    let at_zero = m.characteristic_polynomial().evaluate(&BigInt::zero());
    let sign = if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    expect(at_zero == sign * m.determinant(), || format!("{m:?}")).into()
}

fn charpoly_vs_interpolation(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n = oracle_dim(rng, config);
    let m = random_matrix(rng, n, 9);
    guarded(|| {
        let oracle = naive_characteristic_polynomial(&m)?;
        Ok(expect(oracle == m.characteristic_polynomial(), || format!("{m:?}")))
    })
}

fn determinant_vs_cofactor(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n = oracle_dim(rng, config);
    let m = random_matrix(rng, n, 9);
    guarded(|| Ok(expect(naive_determinant(&m)? == m.determinant(), || format!("{m:?}"))))
}

fn rank_vs_minors(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n = oracle_dim(rng, config).min(5);
    // low-rank products exercise the rank-deficient paths
    let inner = rng.gen_range(1..=n);
    let left = IntMatrix::from_fn(n, |_, j| {
        BigInt::from(if j < inner { rng.gen_range(-3..=3) } else { 0 })
    });
    let right = random_matrix(rng, n, 3);
    let m = &left * &right;
    guarded(|| Ok(expect(naive_rank(&m)? == m.rank(), || format!("{m:?}"))))
}

fn similarity_witness(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (m, p) = matrix_and_perm(rng, config);
    guarded(|| Ok(expect(similarity_witness_check(&p, &m)?, || format!("{m:?} by {p}"))))
}

fn trace_property(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (a, b) = word_pair(rng, config);
    guarded(|| {
        let ab = purified_determinant(&a.concat(&b)?)?;
        let ba = purified_determinant(&b.concat(&a)?)?;
        Ok(expect(ab == ba, || format!("{} and {}", show(&a), show(&b))))
    })
}

fn conjugation_invariance(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let (w, a) = word_pair(rng, config);
    guarded(|| {
        let v = w.conjugate(&a)?;
        let same = purified_determinant(&w)? == purified_determinant(&v)?
            && p_pair(&w)? == p_pair(&v)?
            && conjugacy_key(&w)? == conjugacy_key(&v)?;
        Ok(expect(same, || format!("{} by {}", show(&w), show(&a))))
    })
}

fn rewriting_invariance(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    let v = random_equivalent(&w, 16, rng.gen());
    guarded(|| {
        let (rw, rv) = (invariant_report(&w)?, invariant_report(&v)?);
        let same = rw.crossing == rv.crossing
            && rw.pure_power == rv.pure_power
            && rw.permutation == rv.permutation
            && rw.p == rv.p
            && rw.q == rv.q
            && rw.charpoly == rv.charpoly
            && rw.rank == rv.rank;
        Ok(expect(same, || format!("{} -> {}", show(&w), show(&v))))
    })
}

fn layered_multiplicativity(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let n1 = strands(rng, config);
    let n2 = strands(rng, config);
    let a = random_pure_word(rng, n1, 2);
    let b = random_pure_word(rng, n2, 2);
    guarded(|| {
        let whole = purified_determinant(&a.direct_sum(&b))?;
        let parts = purified_determinant(&a)? * purified_determinant(&b)?;
        Ok(expect(whole == parts, || format!("{} ⊕ {}", show(&a), show(&b))))
    })
}

fn q_stabilization(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    let s = w.stabilize(sign(rng));
    expect(q_determinant(&s) == q_determinant(&w), || {
        format!("{} -> {}", show(&w), show(&s))
    })
    .into()
}

fn pure_power_sum_symmetric(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Trial {
    let w = word(rng, config);
    guarded(|| {
        let m: CrossingMatrix = pure_power_sum(&w)?;
        Ok(expect(m.is_symmetric() && m.has_zero_diagonal(), || show(&w)))
    })
}

fn half_twist_closed_form(_: &mut ChaCha8Rng, _: &VerifyConfig) -> Trial {
    guarded(|| {
        for n in 2..=8usize {
            let delta = BraidWord::half_twist(n)?;
            let sign = if n % 2 == 0 { -BigInt::one() } else { BigInt::one() };
            let expected = sign * BigInt::from(n - 1);
            let all_ones = IntMatrix::from_fn(n, |i, j| BigInt::from((i != j) as u8));
            let p = purified_determinant(&delta)?;
            if p != expected || *pure_power_sum(&delta)? != all_ones {
                return Ok(Err(format!("n={n}: P = {p}, expected {expected}")));
            }
        }
        Ok(Ok(()))
    })
}

fn q_not_conjugation_invariant(_: &mut ChaCha8Rng, _: &VerifyConfig) -> Trial {
    guarded(|| {
        let a = BraidWord::parse("-2 -2 -2 1", Some(3))?;
        let b = BraidWord::parse("-2 -2 1 -2", Some(3))?;
        let conjugator = BraidWord::parse("-2", Some(3))?;
        let (qa, qb) = (q_determinant(&a), q_determinant(&b));
        Ok(expect(
            apply_move(&a.conjugate(&conjugator)?, MoveSpec::FreeCancel { pos: 1 })? == b
                && qa == BigInt::from(-1)
                && qb == BigInt::one(),
            || format!("Q values {qa} and {qb}"),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run(&VerifyConfig {
            max_strands: 4,
            trials: 40,
            seed: 1,
            max_len: 6,
        });
        assert!(report.all_passed(), "{}", report.render_text());
        assert_eq!(report.outcomes.len(), property_names().len());
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let report = run(&VerifyConfig {
            trials: 0,
            ..VerifyConfig::default()
        });
        assert!(report.all_passed());
        assert!(report.outcomes.iter().all(|o| o.passed + o.skipped == 0));
    }

    #[test]
    fn runs_are_reproducible() {
        let config = VerifyConfig {
            trials: 10,
            seed: 99,
            ..VerifyConfig::default()
        };
        assert_eq!(run(&config), run(&config));
    }

    #[test]
    fn property_names_are_unique() {
        let mut names = property_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), PROPERTIES.len());
    }
}
