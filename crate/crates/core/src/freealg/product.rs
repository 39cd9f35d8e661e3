use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::element::Element;
use super::word::Word;
use super::Coeff;
use crate::error::{Error, Result};

/// All interleavings of `u` and `v` that keep each sequence's internal
/// order, with multiplicities. Total multiplicity is `C(|u|+|v|, |u|)`.
///
/// Dynamic programming over suffixes, one row of the `(|u|+1) × (|v|+1)`
/// table at a time. Sequences are built back to front, so they are stored
/// reversed until the end.
pub fn shuffle(u: &[u32], v: &[u32]) -> BTreeMap<Vec<u32>, BigUint> {
    type Row = Vec<BTreeMap<Vec<u32>, BigUint>>;
    let (m, n) = (u.len(), v.len());

    let extend = |dst: &mut BTreeMap<Vec<u32>, BigUint>, src: &BTreeMap<Vec<u32>, BigUint>, l| {
        for (s, c) in src {
            let mut t = Vec::with_capacity(s.len() + 1);
            t.extend_from_slice(s);
            t.push(l);
            *dst.entry(t).or_default() += c;
        }
    };

    let mut below: Row = Vec::new();
    for i in (0..=m).rev() {
        let mut row: Row = vec![BTreeMap::new(); n + 1];
        for j in (0..=n).rev() {
            let mut cell = BTreeMap::new();
            if i == m && j == n {
                cell.insert(Vec::new(), BigUint::one());
            }
            if i < m {
                extend(&mut cell, &below[j], u[i]);
            }
            if j < n {
                extend(&mut cell, &row[j + 1], v[j]);
            }
            row[j] = cell;
        }
        below = row;
    }
    below
        .swap_remove(0)
        .into_iter()
        .map(|(mut s, c)| {
            s.reverse();
            (s, c)
        })
        .collect()
}

/// Half-shuffle product of basis words: `u·v = u₁ (u′ ш v)` where
/// `u = u₁u′`. Every output word starts with `u₁`.
pub fn mul_basis(u: &Word, v: &Word) -> Element {
    let (head, tail) = u.letters().split_first().expect("nonempty word");
    Element::from_terms(shuffle(tail, v.letters()).into_iter().map(|(s, m)| {
        let mut letters = Vec::with_capacity(s.len() + 1);
        letters.push(*head);
        letters.extend(s);
        (Word::from_raw(letters), Coeff::from_integer(m.into()))
    }))
}

/// The coefficient `c` with `x^i x^j = c x^(i+j)`, found by multiplying out.
pub fn power_product_coefficient(i: usize, j: usize) -> Result<Coeff> {
    if i == 0 || j == 0 {
        return Err(Error::ZeroExponent);
    }
    let x = Element::generator(1)?;
    let prod = x.power(i)?.mul(&x.power(j)?);
    let target = Word::power_of(1, i + j)?;
    match prod.terms().collect::<Vec<_>>().as_slice() {
        [(w, c)] if **w == target => Ok((*c).clone()),
        _ => Err(Error::NotScalarMultiple(i, j, i + j)),
    }
}

/// Sum of multiplicities, handy for tests and diagnostics.
pub fn shuffle_count(u: &[u32], v: &[u32]) -> u128 {
    shuffle(u, v)
        .values()
        .map(|c| c.to_u128().expect("fits"))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word_element as we;

    fn m(entries: &[(&[u32], u32)]) -> BTreeMap<Vec<u32>, BigUint> {
        entries
            .iter()
            .map(|(s, c)| (s.to_vec(), BigUint::from(*c)))
            .collect()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&[1], &[2]), m(&[(&[1, 2], 1), (&[2, 1], 1)]));
        assert_eq!(
            shuffle(&[1, 2], &[3]),
            m(&[(&[1, 2, 3], 1), (&[1, 3, 2], 1), (&[3, 1, 2], 1)])
        );
        assert_eq!(shuffle(&[1], &[1]), m(&[(&[1, 1], 2)]));
        assert_eq!(shuffle(&[], &[]), m(&[(&[], 1)]));
        assert_eq!(shuffle(&[4, 5], &[]), m(&[(&[4, 5], 1)]));
    }

    #[test]
    fn mul_basis_examples() {
        assert_eq!(mul_basis(&word(&[1]), &word(&[2])), we(&[1, 2]));
        assert_eq!(
            mul_basis(&word(&[1, 2]), &word(&[3])),
            &we(&[1, 2, 3]) + &we(&[1, 3, 2])
        );
        assert_eq!(
            mul_basis(&word(&[1, 1]), &word(&[1, 1, 1])),
            we(&[1, 1, 1, 1, 1]).scale(&Coeff::from_integer(4.into()))
        );
    }

    #[test]
    fn power_product_examples() {
        let c = |i, j| power_product_coefficient(i, j).unwrap();
        assert_eq!(c(1, 1), Coeff::from_integer(1.into()));
        assert_eq!(c(2, 3), Coeff::from_integer(4.into()));
        assert_eq!(c(3, 2), Coeff::from_integer(6.into()));
        assert_eq!(power_product_coefficient(0, 2), Err(Error::ZeroExponent));
    }

    #[test]
    fn large_repeated_shuffle_is_fast() {
        // C(40, 20) interleavings collapse to a single word.
        let s = shuffle(&[1; 20], &[1; 20]);
        assert_eq!(s.len(), 1);
        assert_eq!(s[&vec![1; 40]], BigUint::from(137_846_528_820u64));
    }

    fn word(l: &[u32]) -> Word {
        Word::new(l.to_vec()).unwrap()
    }
}
