//! Exact computer algebra for free Zinbiel (dual Leibniz) algebras over ℚ.
//!
//! An algebra is Zinbiel when it satisfies `(xy)z = x(zy + yz)`. The free
//! algebra has the left-normed words `x_{i1}(x_{i2}(…x_{in}))` as a basis,
//! and the product of two basis words is the half-shuffle
//! `u·v = u₁ (u′ ш v)`.
//!
//! The crate is split into:
//!
//! - [`freealg`]: words, canonical elements, the half-shuffle product, an
//!   independent term-rewriting normal form, powers and symmetrization.
//! - [`eval`]: the evaluation homomorphism into the one-generated free
//!   algebra, the rational functions `P_n`/`Q_n`, exact rank certificates
//!   and witness search.
//! - [`identities`]: multilinearization, identity tests, multilinear
//!   T-ideal consequence spans and the nil-index lab.
//! - [`cli`]: expression grammar, canonical printing and the command
//!   dispatcher behind the `zinbiel` binary.

pub mod cli;
pub mod error;
pub mod eval;
pub mod freealg;
pub mod identities;
pub mod linalg;

pub use error::{Error, Result};
pub use freealg::{Coeff, Element, ExprTree, Word};
