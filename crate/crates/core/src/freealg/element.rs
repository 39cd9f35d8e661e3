use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::product::mul_basis;
use super::word::Word;
use super::Coeff;
use crate::error::{Error, Result};

/// A finite linear combination of basis words with rational coefficients.
///
/// Canonical form: no zero coefficients are stored and terms iterate in word
/// order (degree, then lexicographic).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Word, Coeff>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn generator(i: u32) -> Result<Self> {
        Ok(Element::from_word(Word::letter(i)?))
    }

    pub fn from_word(w: Word) -> Self {
        Element::from_term(w, Coeff::one())
    }

    pub fn from_term(w: Word, c: Coeff) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Coeff)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<Word, Coeff> {
        &self.terms
    }

    pub fn scale(&self, c: &Coeff) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Degree of every term, if all terms share one degree. Zero has none.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Word::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Generators occurring in some term.
    pub fn generators(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    /// Bilinear extension of the half-shuffle product on basis words.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (w, m) in mul_basis(u, v).terms {
                    out.add_term(w, m * &ab);
                }
            }
        }
        out
    }

    /// Left power: `f^1 = f`, `f^(i+1) = f · f^i`.
    pub fn power(&self, i: usize) -> Result<Element> {
        if i == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut acc = self.clone();
        for _ in 1..i {
            acc = self.mul(&acc);
        }
        Ok(acc)
    }

    /// Symmetrized product `f ∗ g = fg + gf`.
    pub fn star(&self, other: &Element) -> Element {
        let mut out = self.mul(other);
        let back = other.mul(self);
        out.add_scaled(&back, &Coeff::one());
        out
    }

    /// Image under the homomorphism sending `x_i` to `images(i)`.
    ///
    /// A basis word `x_{i1}(x_{i2}(…))` maps to `f_{i1}(f_{i2}(…))`, folded
    /// from the right with [`Element::mul`].
    pub fn substitute<F>(&self, mut images: F) -> Result<Element>
    where
        F: FnMut(u32) -> Option<Element>,
    {
        let mut cache: BTreeMap<u32, Element> = BTreeMap::new();
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            let mut acc: Option<Element> = None;
            for &l in w.letters().iter().rev() {
                let img = match cache.get(&l) {
                    Some(img) => img.clone(),
                    None => {
                        let img = images(l).ok_or(Error::UnassignedGenerator(l))?;
                        cache.insert(l, img.clone());
                        img
                    }
                };
                acc = Some(match acc {
                    None => img,
                    Some(right) => img.mul(&right),
                });
            }
            out.add_scaled(&acc.expect("nonempty word"), c);
        }
        Ok(out)
    }

    /// Renames letters with `f`, which must be injective on the letters used.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> Element {
        Element::from_terms(self.terms.iter().map(|(w, c)| {
            let letters = w.letters().iter().map(|&l| f(l)).collect();
            (Word::from_raw(letters), c.clone())
        }))
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::from_word(w)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Coeff::one());
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Coeff::one())
    }
}

/// The (nonassociative) Zinbiel product.
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs)
    }
}

pub(crate) fn fmt_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text, e.g. `x1(x2 x3) - 3/4 x2 x1`; zero prints as `0`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{} ", fmt_coeff(&a))?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word_element as we;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut e = we(&[1, 2]);
        e.add_term(Word::new(vec![1, 2]).unwrap(), q(-1, 1));
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn mul_examples() {
        assert!(Element::zero().mul(&we(&[3])).is_zero());
        let lhs = &we(&[1]) + &we(&[2]);
        assert_eq!(lhs.mul(&we(&[3])), &we(&[1, 3]) + &we(&[2, 3]));
        let prod = we(&[1]).scale(&q(2, 1)).mul(&we(&[1, 1]).scale(&q(3, 1)));
        assert_eq!(prod, we(&[1, 1, 1]).scale(&q(6, 1)));
    }

    #[test]
    fn power_examples() {
        let x = we(&[1]);
        assert_eq!(x.power(3).unwrap(), we(&[1, 1, 1]));
        let x2 = x.power(2).unwrap();
        assert_eq!(x2.mul(&x2), we(&[1, 1, 1, 1]).scale(&q(3, 1)));
        let s = &we(&[1]) + &we(&[2]);
        let expect = Element::from_terms(
            [[1, 1], [1, 2], [2, 1], [2, 2]].map(|l| (Word::new(l.to_vec()).unwrap(), q(1, 1))),
        );
        assert_eq!(s.power(2).unwrap(), expect);
        assert_eq!(x.power(0), Err(Error::ZeroExponent));
    }

    #[test]
    fn star_examples() {
        assert_eq!(we(&[1]).star(&we(&[2])), &we(&[1, 2]) + &we(&[2, 1]));
        assert_eq!(we(&[1]).star(&we(&[1])), we(&[1, 1]).scale(&q(2, 1)));
        let left = we(&[1]).star(&we(&[2])).star(&we(&[3]));
        let right = we(&[1]).star(&we(&[2]).star(&we(&[3])));
        assert_eq!(left.len(), 6);
        assert!(left.terms().all(|(w, c)| w.is_permutation() && c.is_one()));
        assert_eq!(left, right);
    }

    #[test]
    fn display_signs_and_fractions() {
        let e = Element::from_terms([
            (Word::new(vec![2, 1]).unwrap(), q(-3, 4)),
            (Word::new(vec![1, 2, 3]).unwrap(), q(1, 1)),
            (Word::new(vec![1]).unwrap(), q(-1, 1)),
        ]);
        assert_eq!(e.to_string(), "-x1 - 3/4 x2 x1 + x1(x2 x3)");
    }

    #[test]
    fn substitute_into_one_variable() {
        // x1 x2 with x1 -> x, x2 -> x^2 gives x x^2 = x^3.
        let e = we(&[1, 2]);
        let img = e
            .substitute(|l| Some(we(&vec![1; l as usize])))
            .unwrap();
        assert_eq!(img, we(&[1, 1, 1]));
        assert_eq!(
            e.substitute(|l| (l == 1).then(|| we(&[1]))),
            Err(Error::UnassignedGenerator(2))
        );
    }
}
