//! Normal forms by rewriting with the defining identity.
//!
//! Expressions are first expanded into linear combinations of bracketed
//! monomials. Then the rule `(uv)w → u(wv) + u(vw)` is applied at the
//! innermost-leftmost redex until every monomial is left-normed. This path
//! never calls the half-shuffle product, so it serves as an independent
//! check of it.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::element::Element;
use super::expr::ExprTree;
use super::word::Word;
use super::Coeff;
use crate::error::{Error, Result};

/// A bracketed monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Monomial {
    Leaf(u32),
    Node(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    fn node(l: Monomial, r: Monomial) -> Self {
        Monomial::Node(Box::new(l), Box::new(r))
    }

    /// Letters of a right comb `a(b(c…))`, or `None` if some left child is
    /// itself a product.
    fn as_left_normed(&self) -> Option<Vec<u32>> {
        let mut letters = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                Monomial::Leaf(i) => {
                    letters.push(*i);
                    return Some(letters);
                }
                Monomial::Node(l, r) => match **l {
                    Monomial::Leaf(i) => {
                        letters.push(i);
                        cur = r;
                    }
                    Monomial::Node(..) => return None,
                },
            }
        }
    }

    /// One rewrite step at the innermost-leftmost redex.
    fn rewrite_once(&self) -> Option<(Monomial, Monomial)> {
        let Monomial::Node(l, r) = self else {
            return None;
        };
        if let Some((a, b)) = l.rewrite_once() {
            return Some((Monomial::node(a, (**r).clone()), Monomial::node(b, (**r).clone())));
        }
        if let Some((a, b)) = r.rewrite_once() {
            return Some((Monomial::node((**l).clone(), a), Monomial::node((**l).clone(), b)));
        }
        match &**l {
            Monomial::Node(u, v) => {
                let (u, v, w) = ((**u).clone(), (**v).clone(), (**r).clone());
                Some((
                    Monomial::node(u.clone(), Monomial::node(w.clone(), v.clone())),
                    Monomial::node(u, Monomial::node(v, w)),
                ))
            }
            Monomial::Leaf(_) => None,
        }
    }
}

type Combination = BTreeMap<Monomial, Coeff>;

fn add_to(acc: &mut Combination, m: Monomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(m).or_insert_with(Coeff::zero);
    *slot += c;
}

fn product(l: &Combination, r: &Combination) -> Combination {
    let mut out = Combination::new();
    for (a, ca) in l {
        for (b, cb) in r {
            add_to(&mut out, Monomial::node(a.clone(), b.clone()), ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Distributes sums and scalars and unfolds powers into bracketed monomials.
pub fn expand(e: &ExprTree) -> Result<Combination> {
    let mut out = Combination::new();
    match e {
        ExprTree::Zero => {}
        ExprTree::Generator(0) => return Err(Error::ZeroGenerator),
        ExprTree::Generator(i) => add_to(&mut out, Monomial::Leaf(*i), Coeff::one()),
        ExprTree::Sum(xs) => {
            if xs.is_empty() {
                return Err(Error::EmptySum);
            }
            for x in xs {
                for (m, c) in expand(x)? {
                    add_to(&mut out, m, c);
                }
            }
        }
        ExprTree::Scalar(k, x) => {
            for (m, c) in expand(x)? {
                add_to(&mut out, m, c * k);
            }
        }
        ExprTree::Product(l, r) => return Ok(product(&expand(l)?, &expand(r)?)),
        ExprTree::Power(_, 0) => return Err(Error::ZeroExponent),
        ExprTree::Power(x, k) => {
            let base = expand(x)?;
            let mut acc = base.clone();
            for _ in 1..*k {
                acc = product(&base, &acc);
            }
            return Ok(acc);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Rewrites a combination of bracketed monomials to left-normed form.
pub fn reduce_combination(mut pending: Combination) -> Element {
    let mut out = Element::zero();
    while let Some((m, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        if let Some(letters) = m.as_left_normed() {
            out.add_term(Word::from_raw(letters), c);
            continue;
        }
        let (a, b) = m.rewrite_once().expect("non-left-normed monomial has a redex");
        add_to(&mut pending, a, c.clone());
        add_to(&mut pending, b, c);
    }
    out
}

/// Normal form of an expression in the free Zinbiel algebra, computed by
/// rewriting alone.
pub fn normal_form(e: &ExprTree) -> Result<Element> {
    Ok(reduce_combination(expand(e)?))
}
