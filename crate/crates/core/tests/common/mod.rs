#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use zinbiel::freealg::{Coeff, Element, ExprTree, Word};

pub fn q(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}

pub fn small_coeff(rng: &mut StdRng) -> Coeff {
    let n = rng.gen_range(-4i64..=4);
    let d = rng.gen_range(1i64..=3);
    q(if n == 0 { 1 } else { n }, d)
}

/// A random expression tree whose monomials have degree at most `budget`,
/// over generators `1..=gens`.
pub fn random_tree(rng: &mut StdRng, budget: usize, gens: u32) -> ExprTree {
    let leaf = |rng: &mut StdRng| ExprTree::gen(rng.gen_range(1..=gens));
    if budget <= 1 {
        return if rng.gen_bool(0.2) {
            ExprTree::scalar(small_coeff(rng), leaf(rng))
        } else {
            leaf(rng)
        };
    }
    match rng.gen_range(0..10) {
        0 => leaf(rng),
        1..=5 => {
            let l = rng.gen_range(1..budget);
            ExprTree::product(
                random_tree(rng, l, gens),
                random_tree(rng, budget - l, gens),
            )
        }
        6 | 7 => {
            let k = rng.gen_range(2..=3);
            ExprTree::Sum(
                (0..k)
                    .map(|_| {
                        let b = rng.gen_range(1..=budget);
                        random_tree(rng, b, gens)
                    })
                    .collect(),
            )
        }
        8 => ExprTree::scalar(small_coeff(rng), random_tree(rng, budget, gens)),
        _ => {
            let k = rng.gen_range(2..=budget.min(3)) as u32;
            let inner = (budget / k as usize).max(1);
            ExprTree::power(random_tree(rng, inner.min(2), gens), k)
        }
    }
}

/// A random homogeneous element of the given degree.
pub fn random_homogeneous(rng: &mut StdRng, degree: usize, gens: u32, terms: usize) -> Element {
    Element::from_terms((0..terms).map(|_| {
        let letters = (0..degree).map(|_| rng.gen_range(1..=gens)).collect();
        (Word::new(letters).unwrap(), small_coeff(rng))
    }))
}

/// Right-nested product tree for a left-normed word.
pub fn word_tree(letters: &[u32]) -> ExprTree {
    let mut it = letters.iter().rev();
    let mut acc = ExprTree::gen(*it.next().unwrap());
    for &l in it {
        acc = ExprTree::product(ExprTree::gen(l), acc);
    }
    acc
}

/// Expression tree for an element, term by term.
pub fn element_tree(e: &Element) -> ExprTree {
    let terms: Vec<ExprTree> = e
        .terms()
        .map(|(w, c)| ExprTree::scalar(c.clone(), word_tree(w.letters())))
        .collect();
    match terms.len() {
        0 => ExprTree::Zero,
        1 => terms.into_iter().next().unwrap(),
        _ => ExprTree::Sum(terms),
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    // Pascal's rule, independent of any closed form used by the library.
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}
