//! Evaluation into the one-generated free algebra.
//!
//! Sending `x_i ↦ X_{λ_i}` maps a left-normed word `x_{i1}(…x_{in})` to
//! `P_n(λ_{i1}, …, λ_{in}) X_{Σλ}` with
//!
//! ```text
//! P_n(λ) = Π_{k<n} λ_k / (λ_k + … + λ_n)
//! Q_n(λ) = 1 / Π_{k=2..n} (λ_k + … + λ_n)
//! P_n(λ) = (λ_1 ⋯ λ_n / Σλ) Q_n(λ)
//! ```
//!
//! A multilinear element is an identity of the one-generated algebra iff its
//! `P_n`-combination vanishes at every positive integer tuple; [`rank`]
//! certifies that no nonzero combination does.

mod onevar;
pub mod rank;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Element, Word};

pub use onevar::OneVarElement;
pub use rank::{theorem1_rank, witness_search, RankCertificate, TupleShells, Witness};

/// Positive integer weights `(λ_1, …, λ_n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LambdaTuple(Vec<u64>);

impl LambdaTuple {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::DegreeTooSmall(1));
        }
        if weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(LambdaTuple(weights))
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `(λ_{σ1}, …, λ_{σn})` for a 1-based permutation `σ`.
    pub fn permuted(&self, sigma: &[u32]) -> LambdaTuple {
        LambdaTuple(sigma.iter().map(|&s| self.0[s as usize - 1]).collect())
    }
}

impl fmt::Display for LambdaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Suffix sums `λ_k + … + λ_n` for `k = 1..n`.
fn suffix_sums(w: &[u64]) -> Vec<u64> {
    let mut sums = vec![0; w.len()];
    let mut acc = 0;
    for (k, &x) in w.iter().enumerate().rev() {
        acc += x;
        sums[k] = acc;
    }
    sums
}

pub(crate) fn p_ratio(w: &[u64]) -> Coeff {
    let sums = suffix_sums(w);
    let n = w.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        num *= w[k];
        den *= sums[k];
    }
    Coeff::new(num, den)
}

/// `P_n(λ) = Π_{k=1}^{n-1} λ_k / (λ_k + … + λ_n)`; `P_1 = 1`.
pub fn p_n(lambda: &LambdaTuple) -> Coeff {
    p_ratio(&lambda.0)
}

/// `Q_n(λ) = 1 / Π_{k=2}^{n} (λ_k + … + λ_n)`; `Q_1 = 1`, `Q_2 = 1/λ_2`.
pub fn q_n(lambda: &LambdaTuple) -> Coeff {
    let sums = suffix_sums(&lambda.0);
    let den = sums.iter().skip(1).fold(BigInt::one(), |acc, &s| acc * s);
    Coeff::new(BigInt::one(), den)
}

/// Generator weights for the evaluation `x_i ↦ X_{λ_i}`.
pub type Assignment = BTreeMap<u32, u64>;

fn weights_for(w: &Word, assign: &Assignment) -> Result<Vec<u64>> {
    w.letters()
        .iter()
        .map(|l| match assign.get(l) {
            None => Err(Error::UnassignedGenerator(*l)),
            Some(0) => Err(Error::NonPositiveWeight),
            Some(&x) => Ok(x),
        })
        .collect()
}

/// Image of a basis word: `(P_n(λ_{i1}, …, λ_{in}), Σλ)`, meaning
/// `P_n · X_{Σλ}`.
pub fn psi_word(w: &Word, assign: &Assignment) -> Result<(Coeff, u64)> {
    let ws = weights_for(w, assign)?;
    Ok((p_ratio(&ws), ws.iter().sum()))
}

/// Linear extension of [`psi_word`].
pub fn psi_element(f: &Element, assign: &Assignment) -> Result<OneVarElement> {
    let mut out = OneVarElement::zero();
    for (w, c) in f.terms() {
        let (p, m) = psi_word(w, assign)?;
        out.add_term(m, p * c);
    }
    Ok(out)
}

/// The same image computed inside the free algebra: substitute
/// `x_i ↦ λ_i! x^{λ_i}`, multiply out, and convert back to the `X` basis.
pub fn psi_element_via_products(f: &Element, assign: &Assignment) -> Result<OneVarElement> {
    let img = f.substitute(|l| {
        let m = *assign.get(&l)?;
        OneVarElement::basis(m).ok()?.to_power_basis(1).ok()
    })?;
    OneVarElement::from_power_basis(&img)
}

/// A factor `constant + (λ_n if has_last)` of a denominator, after the
/// first `n - 1` weights have been substituted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct LinearFactor {
    constant: u64,
    has_last: bool,
}

/// Outcome of the descent check for one prefix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescentReport {
    pub degree: usize,
    /// `λ_n Q_n(prefix, λ_n)` at `λ_n = 0`, after cancelling `λ_n`.
    pub limit: Coeff,
    /// `Q_{n-1}(prefix)`.
    pub expected: Coeff,
    /// Permutations whose denominator was inspected.
    pub permutations_checked: usize,
    /// Every inspected `σ` had an isolated `λ_n` factor iff `σn = n`.
    pub divisibility_ok: bool,
}

impl DescentReport {
    pub fn holds(&self) -> bool {
        self.limit == self.expected && self.divisibility_ok
    }
}

/// Sample of `S_n` used for the divisibility claim: all of it for `n <= 6`,
/// otherwise the identity, every transposition and every rotation.
fn sample_permutations(n: usize) -> Vec<Vec<u32>> {
    let id: Vec<u32> = (1..=n as u32).collect();
    if n <= 6 {
        return id.iter().copied().permutations(n).collect();
    }
    let mut out = BTreeSet::new();
    out.insert(id.clone());
    for a in 0..n {
        for b in a + 1..n {
            let mut s = id.clone();
            s.swap(a, b);
            out.insert(s);
        }
        let mut r = id.clone();
        r.rotate_left(a);
        out.insert(r);
    }
    out.into_iter().collect()
}

/// Whether the denominator of `Q_n(λ_{σ1}, …, λ_{σn})` has `λ_n` alone as a
/// factor. Factors are the suffix sums over the variable sets
/// `{σk, …, σn}`, `k >= 2`.
fn has_isolated_last_factor(sigma: &[u32]) -> bool {
    let n = sigma.len() as u32;
    (1..sigma.len()).any(|k| {
        let vars: BTreeSet<u32> = sigma[k..].iter().copied().collect();
        vars.len() == 1 && vars.contains(&n)
    })
}

/// Checks the descent step for `n = prefix.len() + 1`:
/// `λ_n Q_n(prefix, λ_n)` at `λ_n = 0` equals `Q_{n-1}(prefix)`, and the
/// denominator of `Q_n(λ_σ)` has `λ_n` as a factor exactly when `σn = n`.
pub fn descent_report(prefix: &LambdaTuple) -> DescentReport {
    let w = prefix.weights();
    let n = w.len() + 1;

    // Denominator of Q_n(prefix, λ_n): factors (λ_k + … + λ_{n-1}) + λ_n.
    let sums = suffix_sums(w);
    let mut factors: Vec<LinearFactor> = sums
        .iter()
        .skip(1)
        .map(|&s| LinearFactor {
            constant: s,
            has_last: true,
        })
        .collect();
    factors.push(LinearFactor {
        constant: 0,
        has_last: true,
    });
    // Multiplying by λ_n cancels the bare λ_n factor.
    let bare = factors
        .iter()
        .position(|f| f.constant == 0 && f.has_last)
        .expect("Q_n has a bare last factor");
    factors.remove(bare);
    let den = factors
        .iter()
        .fold(BigInt::one(), |acc, f| acc * f.constant);
    let limit = Coeff::new(BigInt::one(), den);

    let perms = sample_permutations(n);
    let divisibility_ok = perms
        .iter()
        .all(|s| has_isolated_last_factor(s) == (s[n - 1] == n as u32));

    DescentReport {
        degree: n,
        limit,
        expected: q_n(prefix),
        permutations_checked: perms.len(),
        divisibility_ok,
    }
}

pub fn descent_check(prefix: &LambdaTuple) -> bool {
    descent_report(prefix).holds()
}
