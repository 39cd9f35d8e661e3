use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Element, Word};

/// An element `Σ c_m X_m` of the one-generated free algebra in the divided
/// power basis `X_m = m! x^m`, where `X_i X_j = i/(i+j) X_(i+j)`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct OneVarElement {
    terms: BTreeMap<u64, Coeff>,
}

impl OneVarElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `X_m`.
    pub fn basis(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::NonPositiveWeight);
        }
        let mut e = Self::zero();
        e.add_term(m, Coeff::one());
        Ok(e)
    }

    pub fn add_term(&mut self, m: u64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Coeff)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: u64) -> Coeff {
        self.terms.get(&m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                let k = Coeff::new(BigInt::from(i), BigInt::from(i + j));
                out.add_term(i + j, a * b * k);
            }
        }
        out
    }

    /// Rewrites in the word basis of the free algebra on `generator`:
    /// `c X_m = c m! x^m`.
    pub fn to_power_basis(&self, generator: u32) -> Result<Element> {
        let mut out = Element::zero();
        for (&m, c) in &self.terms {
            let w = Word::power_of(generator, m as usize)?;
            out.add_term(w, c * Coeff::from_integer(factorial(m)));
        }
        Ok(out)
    }

    /// Inverse of [`to_power_basis`](Self::to_power_basis). Fails on words
    /// that are not powers of a single generator.
    pub fn from_power_basis(e: &Element) -> Result<Self> {
        let mut out = Self::zero();
        let mut gen = None;
        for (w, c) in e.terms() {
            let first = w.first();
            if w.letters().iter().any(|&l| l != first) || gen.is_some_and(|g| g != first) {
                return Err(Error::NotHomogeneous);
            }
            gen = Some(first);
            let m = w.degree() as u64;
            out.add_term(m, c / Coeff::from_integer(factorial(m)));
        }
        Ok(out)
    }
}

pub(crate) fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

impl fmt::Display for OneVarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a} ")?;
            }
            write!(f, "X{m}")?;
        }
        Ok(())
    }
}
