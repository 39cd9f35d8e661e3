use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Element, Word};

/// A multilinear element `Σ_{σ ∈ S_n} α_σ x_{σ1}(x_{σ2}(…x_{σn}))`,
/// keyed by the one-line notation `[σ1, …, σn]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultilinearElement {
    degree: usize,
    coeffs: BTreeMap<Vec<u32>, Coeff>,
}

fn check_perm(sigma: &[u32], n: usize) -> Result<()> {
    let w = Word::new(sigma.to_vec());
    match w {
        Ok(w) if w.degree() == n && w.is_permutation() => Ok(()),
        _ => Err(Error::NotPermutation(format!("{sigma:?}"))),
    }
}

impl MultilinearElement {
    /// The zero element of degree `degree` (which must be at least 1).
    pub fn zero(degree: usize) -> Self {
        assert!(degree >= 1, "multilinear elements have degree >= 1");
        MultilinearElement {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_pairs<I>(degree: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Coeff)>,
    {
        if degree == 0 {
            return Err(Error::DegreeTooSmall(1));
        }
        let mut m = MultilinearElement::zero(degree);
        for (sigma, c) in pairs {
            m.add_term(sigma, c)?;
        }
        Ok(m)
    }

    pub fn add_term(&mut self, sigma: Vec<u32>, c: Coeff) -> Result<()> {
        check_perm(&sigma, self.degree)?;
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(sigma.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&sigma);
        }
        Ok(())
    }

    /// Reads an element whose words are all permutations of `1..=n`.
    pub fn from_element(e: &Element, degree: usize) -> Result<Self> {
        let mut m = MultilinearElement::zero(degree.max(1));
        for (w, c) in e.terms() {
            m.add_term(w.letters().to_vec(), c.clone())?;
        }
        Ok(m)
    }

    pub fn to_element(&self) -> Element {
        Element::from_terms(
            self.coeffs
                .iter()
                .map(|(s, c)| (Word::new(s.clone()).expect("permutation"), c.clone())),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&[u32], &Coeff)> {
        self.coeffs.iter().map(|(s, c)| (s.as_slice(), c))
    }

    pub fn coeff(&self, sigma: &[u32]) -> Coeff {
        self.coeffs.get(sigma).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Substitutes variable `i` by generator `targets[i - 1]`.
    pub fn restitute(&self, targets: &[u32]) -> Element {
        self.to_element().relabel(|l| targets[l as usize - 1])
    }

    /// Every permutation of `1..=n`, in lexicographic order.
    pub fn permutations(n: usize) -> impl Iterator<Item = Vec<u32>> {
        (1..=n as u32).permutations(n)
    }
}

impl fmt::Display for MultilinearElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_element())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rejects_non_permutations() {
        let mut m = MultilinearElement::zero(3);
        assert!(m.add_term(vec![1, 1, 2], Coeff::one()).is_err());
        assert!(m.add_term(vec![1, 2], Coeff::one()).is_err());
        assert!(m.add_term(vec![3, 1, 2], Coeff::one()).is_ok());
    }

    #[test]
    fn element_round_trip() {
        let m = MultilinearElement::from_pairs(
            3,
            [(vec![1, 2, 3], Coeff::one()), (vec![2, 1, 3], -Coeff::one())],
        )
        .unwrap();
        let back = MultilinearElement::from_element(&m.to_element(), 3).unwrap();
        assert_eq!(back, m);
        assert_eq!(m.restitute(&[1, 1, 1]), Element::zero());
    }

    #[test]
    fn permutation_listing() {
        assert_eq!(MultilinearElement::permutations(3).count(), 6);
        assert_eq!(MultilinearElement::permutations(3).next(), Some(vec![1, 2, 3]));
    }
}
