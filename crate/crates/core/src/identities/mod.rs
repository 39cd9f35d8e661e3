//! Identity processing: polarization, identity tests for the whole variety
//! and for the one-generated free algebra, and multilinear consequence spans
//! of nil identities.

mod consequence;
mod multilinear;
pub mod polarize;

use crate::error::{Error, Result};
use crate::eval::{witness_search, Witness};
use crate::freealg::{normal_form, word_tuples_up_to_renaming, Element, ExprTree};

pub use consequence::{
    consequence_span, dimension_table, nil_lab, ConsequenceEngine, ConsequenceReport,
    DegreeRecord,
};
pub use multilinear::MultilinearElement;
pub use polarize::multilinearize;

/// True iff `e` vanishes in every Zinbiel algebra, i.e. its normal form in
/// the free algebra is zero.
pub fn is_identity_variety(e: &ExprTree) -> Result<bool> {
    Ok(normal_form(e)?.is_zero())
}

/// A polarized component of a non-identity together with an evaluation
/// that does not vanish on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentWitness {
    /// Index into `multilinearize(e)`.
    pub component: usize,
    pub multilinear: MultilinearElement,
    pub witness: Witness,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneGeneratedVerdict {
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub witness: Option<ComponentWitness>,
    /// The reduced form of the input.
    pub normal_form: Element,
}

/// Whether `e = 0` holds in the free algebra on one generator, decided two
/// independent ways:
///
/// - structurally, by the rewriting normal form;
/// - by evaluation: evaluate with the half-shuffle product, polarize, and
///   search each component for a tuple of weights with nonzero image.
///
/// Returns an error when the verdicts disagree, or when a nonzero component
/// has no witness with weights up to `max_weight`.
pub fn is_identity_one_generated(e: &ExprTree, max_weight: u64) -> Result<OneGeneratedVerdict> {
    let nf = normal_form(e)?;
    let structural = nf.is_zero();

    let components = multilinearize(&e.evaluate()?)?;
    let mut found = None;
    for (component, m) in components.iter().enumerate() {
        match witness_search(m, max_weight) {
            Some(witness) => {
                found = Some(ComponentWitness {
                    component,
                    multilinear: m.clone(),
                    witness,
                });
                break;
            }
            None if structural => return Err(Error::VerdictMismatch),
            None => {
                return Err(Error::InconclusiveEvaluation {
                    component,
                    max_weight,
                })
            }
        }
    }
    let evaluation = found.is_none();
    if evaluation != structural {
        return Err(Error::VerdictMismatch);
    }
    Ok(OneGeneratedVerdict {
        holds: structural,
        witness: found,
        normal_form: nf,
    })
}

/// Checks that the symmetrized product `a ∗ b = ab + ba` is commutative on
/// all pairs and associative on all triples of basis words with total
/// degree at most `d_max`. Both properties are invariant under renaming
/// letters, so one representative per renaming class is checked.
pub fn symmetrization_check(d_max: usize) -> Result<bool> {
    if d_max < 3 {
        return Err(Error::DegreeTooSmall(3));
    }
    let commutative = word_tuples_up_to_renaming(2, d_max).iter().all(|p| {
        let (u, v) = (Element::from(p[0].clone()), Element::from(p[1].clone()));
        u.star(&v) == v.star(&u)
    });
    let associative = word_tuples_up_to_renaming(3, d_max).iter().all(|t| {
        let [u, v, w] = [0, 1, 2].map(|k| Element::from(t[k].clone()));
        u.star(&v).star(&w) == u.star(&v.star(&w))
    });
    Ok(commutative && associative)
}
