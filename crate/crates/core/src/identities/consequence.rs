//! Multilinear parts of T-ideals.
//!
//! For identities `f_1, …, f_r` let `W_e` be the degree-`e` multilinear
//! component (variables `1..=e`) of the T-ideal they generate. In
//! characteristic zero that T-ideal is generated by the full
//! linearizations `M` of the `f_i`, and `W_e` is spanned by
//!
//! 1. substitution instances `M(u_1, …, u_k)` where the `u_j` are basis
//!    words over the blocks of an ordered partition of `{1..e}` into `k`
//!    blocks, and
//! 2. products `h·u` and `u·h` with `h` a relabelled element of some
//!    `W_{e'}`, `e' < e`, and `u` a basis word in the remaining variables.
//!
//! Any consequence is a nested product context around a substitution
//! instance. Peeling the outermost product gives case 2 with a smaller
//! consequence inside; an empty context is case 1. Every monomial in
//! distinct variables is a combination of basis words, so words suffice
//! for both `u` and `u_j`. Each `W_e` lives inside the `e!`-dimensional
//! multilinear component, so the construction is finite.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::polarize::multilinearize;
use super::MultilinearElement;
use crate::error::{Error, Result};
use crate::freealg::{Element, Word};
use crate::linalg::SparseEchelon;

/// The multilinear consequences of a set of identities in one degree.
#[derive(Clone, Debug)]
pub struct DegreeRecord {
    pub degree: usize,
    pub dimension: usize,
    /// `degree!`.
    pub full_dimension: usize,
    span: SparseEchelon<Word>,
}

impl DegreeRecord {
    pub fn is_full(&self) -> bool {
        self.dimension == self.full_dimension
    }

    /// Basis of the span, in echelon form.
    pub fn basis(&self) -> Vec<Element> {
        self.span
            .rows()
            .map(|r| Element::from_terms(r.iter().map(|(w, c)| (w.clone(), c.clone()))))
            .collect()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.span.contains(e.term_map().clone())
    }
}

/// Per-degree spans for `nil_lab`.
#[derive(Clone, Debug)]
pub struct ConsequenceReport {
    pub nil_index: usize,
    pub max_degree: usize,
    pub records: Vec<DegreeRecord>,
    /// Least degree whose multilinear component is entirely consequences.
    pub nilpotency_degree: Option<usize>,
}

/// Incrementally computes `W_1, W_2, …` for a fixed set of identities.
#[derive(Clone, Debug)]
pub struct ConsequenceEngine {
    linearized: Vec<MultilinearElement>,
    // spans[e] holds W_e; spans[0] is unused.
    spans: Vec<SparseEchelon<Word>>,
    bases: Vec<Vec<Element>>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Every surjection `{1..e} → {1..k}`, as the list of its fibres.
fn ordered_partitions(e: usize, k: usize) -> Vec<Vec<Vec<u32>>> {
    if k == 0 || k > e {
        return Vec::new();
    }
    let mut out = Vec::new();
    for assignment in (0..e).map(|_| 0..k).multi_cartesian_product() {
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in assignment.iter().enumerate() {
            blocks[b].push(i as u32 + 1);
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(blocks);
        }
    }
    out
}

fn words_on(vars: &[u32]) -> Vec<Element> {
    vars.iter()
        .copied()
        .permutations(vars.len())
        .map(|p| Element::from_word(Word::new(p).expect("nonempty block")))
        .collect()
}

impl ConsequenceEngine {
    /// Identities must be homogeneous; zero identities are ignored.
    pub fn new(generators: &[Element]) -> Result<Self> {
        let mut linearized = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous);
            }
            linearized.extend(multilinearize(g)?);
        }
        Ok(ConsequenceEngine {
            linearized,
            spans: vec![SparseEchelon::new()],
            bases: vec![Vec::new()],
        })
    }

    /// Computes every `W_e` with `e <= d` not yet known.
    fn extend_to(&mut self, d: usize) {
        while self.spans.len() <= d {
            let e = self.spans.len();
            let span = self.compute(e);
            let basis = span
                .rows()
                .map(|r| Element::from_terms(r.iter().map(|(w, c)| (w.clone(), c.clone()))))
                .collect();
            self.spans.push(span);
            self.bases.push(basis);
        }
    }

    fn compute(&self, e: usize) -> SparseEchelon<Word> {
        let full = factorial(e);
        let mut span = SparseEchelon::new();
        let add = |span: &mut SparseEchelon<Word>, x: Element| {
            if !x.is_zero() {
                span.insert(x.term_map().clone());
            }
            span.rank() == full
        };

        // Substitution instances of the linearized identities.
        for m in &self.linearized {
            let k = m.degree();
            let body = m.to_element();
            for blocks in ordered_partitions(e, k) {
                let choices: Vec<Vec<Element>> = blocks.iter().map(|b| words_on(b)).collect();
                for pick in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
                    let inst = body
                        .substitute(|slot| Some(pick[slot as usize - 1].clone()))
                        .expect("every slot is assigned");
                    if add(&mut span, inst) {
                        return span;
                    }
                }
            }
        }

        // Products with lower-degree consequences.
        let all: Vec<u32> = (1..=e as u32).collect();
        for lower in 1..e {
            if self.bases[lower].is_empty() {
                continue;
            }
            for subset in all.iter().copied().combinations(lower) {
                let rest: Vec<u32> = all.iter().copied().filter(|v| !subset.contains(v)).collect();
                let outer = words_on(&rest);
                for h in &self.bases[lower] {
                    let h = h.relabel(|l| subset[l as usize - 1]);
                    for u in &outer {
                        if add(&mut span, h.mul(u)) || add(&mut span, u.mul(&h)) {
                            return span;
                        }
                    }
                }
            }
        }
        span
    }

    pub fn record(&mut self, d: usize) -> DegreeRecord {
        self.extend_to(d);
        let span = self.spans[d].clone();
        DegreeRecord {
            degree: d,
            dimension: span.rank(),
            full_dimension: factorial(d),
            span,
        }
    }
}

/// Degree-`d` multilinear part of the T-ideal generated by `generators`.
pub fn consequence_span(generators: &[Element], d: usize) -> Result<DegreeRecord> {
    if d == 0 {
        return Err(Error::DegreeTooSmall(1));
    }
    Ok(ConsequenceEngine::new(generators)?.record(d))
}

/// Spans of the consequences of `x^t = 0` in degrees `t..=d_max`, stopping
/// at the first degree where they fill the whole multilinear component.
pub fn nil_lab(t: usize, d_max: usize) -> Result<ConsequenceReport> {
    if t == 0 {
        return Err(Error::ZeroExponent);
    }
    if d_max < t {
        return Err(Error::DegreeTooSmall(t));
    }
    let x_t = Element::from_word(Word::power_of(1, t)?);
    let mut engine = ConsequenceEngine::new(&[x_t])?;
    let mut records = Vec::new();
    let mut nilpotency_degree = None;
    for d in t..=d_max {
        let r = engine.record(d);
        let full = r.is_full();
        records.push(r);
        if full {
            nilpotency_degree = Some(d);
            break;
        }
    }
    Ok(ConsequenceReport {
        nil_index: t,
        max_degree: d_max,
        records,
        nilpotency_degree,
    })
}

/// Dimension table `degree → (dimension, degree!)` of a report.
pub fn dimension_table(report: &ConsequenceReport) -> BTreeMap<usize, (usize, usize)> {
    report
        .records
        .iter()
        .map(|r| (r.degree, (r.dimension, r.full_dimension)))
        .collect()
}
