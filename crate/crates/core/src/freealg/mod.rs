//! The free Zinbiel algebra over ℚ.
//!
//! Elements are linear combinations of left-normed words. The product of two
//! words is the half-shuffle `u·v = u₁ (u′ ш v)`; [`rewrite`] computes the
//! same normal forms by rewriting with `(uv)w → u(wv) + u(vw)` and is kept
//! independent of the product so the two can check each other.

mod element;
mod expr;
mod product;
pub mod rewrite;
mod word;

use num_rational::BigRational;

pub use element::Element;
pub use expr::ExprTree;
pub use product::{mul_basis, power_product_coefficient, shuffle, shuffle_count};
pub use rewrite::normal_form;
pub use word::{letter_patterns, split_into_words, word_tuples_up_to_renaming, Word};

/// Exact rational coefficient, always in lowest terms.
pub type Coeff = BigRational;

/// The element consisting of a single basis word with coefficient 1.
///
/// Panics on an invalid word; meant for tests and literals.
pub fn word_element(letters: &[u32]) -> Element {
    Element::from_word(Word::new(letters.to_vec()).expect("valid word"))
}
