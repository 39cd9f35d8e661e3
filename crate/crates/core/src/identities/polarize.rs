//! Full polarization of identities.
//!
//! An element splits into multihomogeneous components. A component of
//! multidegree `(d_g)_g` is linearized by giving generator `g` its own block
//! of `d_g` fresh variables (blocks are consecutive, in increasing generator
//! order) and applying inclusion–exclusion over nonempty subsets `S_g` of
//! each block:
//!
//! ```text
//! M = Σ_{S} (-1)^{Σ (d_g - |S_g|)} f(x_g ↦ Σ_{i ∈ S_g} y_i)
//! ```
//!
//! Only the multilinear part survives. Setting every `y_i` in `g`'s block
//! back to `x_g` gives `Π d_g! · f`.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::MultilinearElement;
use crate::error::Result;
use crate::freealg::{Coeff, Element, Word};

/// Multidegree as sorted `(generator, count)` pairs.
pub type Multidegree = Vec<(u32, usize)>;

/// Groups terms by multidegree.
pub fn multihomogeneous_components(f: &Element) -> BTreeMap<Multidegree, Element> {
    let mut out: BTreeMap<Multidegree, Element> = BTreeMap::new();
    for (w, c) in f.terms() {
        out.entry(w.multidegree())
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    out
}

/// Fresh-variable blocks: generator `g` gets the 1-based slots in
/// `blocks[g]`.
pub fn slot_blocks(md: &Multidegree) -> BTreeMap<u32, Vec<u32>> {
    let mut next = 1u32;
    md.iter()
        .map(|&(g, d)| {
            let block = (next..next + d as u32).collect();
            next += d as u32;
            (g, block)
        })
        .collect()
}

/// For each slot, the generator it stands for.
pub fn slot_targets(md: &Multidegree) -> Vec<u32> {
    md.iter().flat_map(|&(g, d)| std::iter::repeat(g).take(d)).collect()
}

/// Image of `f` under `x_g ↦ Σ_{i ∈ choice[g]} y_i`, expanded letter by
/// letter.
fn substitute_sums(f: &Element, choice: &BTreeMap<u32, Vec<u32>>) -> Element {
    let mut out = Element::zero();
    for (w, c) in f.terms() {
        let options = w.letters().iter().map(|l| choice[l].iter().copied());
        for letters in options.multi_cartesian_product() {
            out.add_term(Word::new(letters).expect("positive slots"), c.clone());
        }
    }
    out
}

fn nonempty_subsets(block: &[u32]) -> Vec<Vec<u32>> {
    (1..1u64 << block.len())
        .map(|mask| {
            block
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s)
                .collect()
        })
        .collect()
}

/// Full linearization of one multihomogeneous component.
pub fn polarize_component(f: &Element, md: &Multidegree) -> Result<MultilinearElement> {
    let blocks = slot_blocks(md);
    let n: usize = md.iter().map(|&(_, d)| d).sum();
    let gens: Vec<u32> = blocks.keys().copied().collect();
    let subset_lists: Vec<Vec<Vec<u32>>> =
        gens.iter().map(|g| nonempty_subsets(&blocks[g])).collect();

    let mut total = Element::zero();
    for pick in subset_lists.iter().map(|v| v.iter()).multi_cartesian_product() {
        let missing: usize = pick
            .iter()
            .zip(&gens)
            .map(|(s, g)| blocks[g].len() - s.len())
            .sum();
        let sign = if missing % 2 == 0 {
            Coeff::from_integer(1.into())
        } else {
            Coeff::from_integer((-1).into())
        };
        let choice: BTreeMap<u32, Vec<u32>> =
            gens.iter().copied().zip(pick.into_iter().cloned()).collect();
        total.add_scaled(&substitute_sums(f, &choice), &sign);
    }
    MultilinearElement::from_element(&total, n)
}

/// Decomposes `f` into multihomogeneous components and fully polarizes each,
/// in increasing multidegree order. Zero gives an empty list.
pub fn multilinearize(f: &Element) -> Result<Vec<MultilinearElement>> {
    multihomogeneous_components(f)
        .iter()
        .map(|(md, comp)| polarize_component(comp, md))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word_element as we;
    use num_traits::One;

    #[test]
    fn multilinear_input_is_unchanged() {
        let ms = multilinearize(&we(&[1, 2, 3])).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].to_element(), we(&[1, 2, 3]));
    }

    #[test]
    fn square_and_cube() {
        let ms = multilinearize(&we(&[1, 1])).unwrap();
        assert_eq!(ms[0].to_element(), &we(&[1, 2]) + &we(&[2, 1]));
        let ms = multilinearize(&we(&[1, 1, 1])).unwrap();
        assert_eq!(ms[0].coefficients().count(), 6);
        assert!(ms[0].coefficients().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn mixed_generators() {
        // x1 x1 x2: the two x1-slots become y1, y2 and x2 becomes y3.
        let f = we(&[2, 1, 1]);
        let ms = multilinearize(&f).unwrap();
        assert_eq!(ms[0].to_element(), &we(&[3, 1, 2]) + &we(&[3, 2, 1]));
        assert_eq!(
            ms[0].restitute(&slot_targets(&f.terms().next().unwrap().0.multidegree())),
            f.scale(&Coeff::from_integer(2.into()))
        );
    }

    #[test]
    fn components_are_separated() {
        let f = &(&we(&[1, 2]) + &we(&[1, 1])) + &we(&[2, 1]);
        let comps = multihomogeneous_components(&f);
        assert_eq!(comps.len(), 2);
        assert_eq!(multilinearize(&f).unwrap().len(), 2);
        assert!(multilinearize(&Element::zero()).unwrap().is_empty());
    }
}
