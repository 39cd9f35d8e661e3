use std::fmt;

use num_traits::{One, Signed};

use super::element::{fmt_coeff, Element};
use super::Coeff;
use crate::error::{Error, Result};

/// An arbitrary nonassociative expression, before reduction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExprTree {
    /// The zero element (the canonical text `0`).
    Zero,
    Generator(u32),
    Sum(Vec<ExprTree>),
    Scalar(Coeff, Box<ExprTree>),
    Product(Box<ExprTree>, Box<ExprTree>),
    /// Left power `a^k`, `k >= 1`.
    Power(Box<ExprTree>, u32),
}

impl ExprTree {
    pub fn gen(i: u32) -> Self {
        ExprTree::Generator(i)
    }

    pub fn product(l: ExprTree, r: ExprTree) -> Self {
        ExprTree::Product(Box::new(l), Box::new(r))
    }

    pub fn scalar(c: Coeff, child: ExprTree) -> Self {
        ExprTree::Scalar(c, Box::new(child))
    }

    pub fn power(child: ExprTree, k: u32) -> Self {
        ExprTree::Power(Box::new(child), k)
    }

    pub fn neg(child: ExprTree) -> Self {
        ExprTree::scalar(-Coeff::one(), child)
    }

    /// Checks the structural invariants: generator indices and exponents are
    /// positive and sums are nonempty.
    pub fn validate(&self) -> Result<()> {
        match self {
            ExprTree::Zero => Ok(()),
            ExprTree::Generator(0) => Err(Error::ZeroGenerator),
            ExprTree::Generator(_) => Ok(()),
            ExprTree::Sum(xs) if xs.is_empty() => Err(Error::EmptySum),
            ExprTree::Sum(xs) => xs.iter().try_for_each(ExprTree::validate),
            ExprTree::Scalar(_, c) => c.validate(),
            ExprTree::Product(l, r) => {
                l.validate()?;
                r.validate()
            }
            ExprTree::Power(_, 0) => Err(Error::ZeroExponent),
            ExprTree::Power(c, _) => c.validate(),
        }
    }

    /// Bottom-up evaluation with the half-shuffle product.
    pub fn evaluate(&self) -> Result<Element> {
        Ok(match self {
            ExprTree::Zero => Element::zero(),
            ExprTree::Generator(i) => Element::generator(*i)?,
            ExprTree::Sum(xs) => {
                let mut acc = Element::zero();
                for x in xs {
                    acc.add_scaled(&x.evaluate()?, &Coeff::one());
                }
                acc
            }
            ExprTree::Scalar(c, x) => x.evaluate()?.scale(c),
            ExprTree::Product(l, r) => l.evaluate()?.mul(&r.evaluate()?),
            ExprTree::Power(x, k) => x.evaluate()?.power(*k as usize)?,
        })
    }

    /// Total number of generator occurrences after expanding powers, an upper
    /// bound on the degree of every resulting monomial.
    pub fn degree_bound(&self) -> usize {
        match self {
            ExprTree::Zero => 0,
            ExprTree::Generator(_) => 1,
            ExprTree::Sum(xs) => xs.iter().map(ExprTree::degree_bound).max().unwrap_or(0),
            ExprTree::Scalar(_, x) => x.degree_bound(),
            ExprTree::Product(l, r) => l.degree_bound() + r.degree_bound(),
            ExprTree::Power(x, k) => x.degree_bound() * *k as usize,
        }
    }

    fn is_generator(&self) -> bool {
        matches!(self, ExprTree::Generator(_))
    }
}

fn fmt_operand(t: &ExprTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        ExprTree::Generator(_) => write!(f, "{t}"),
        ExprTree::Power(x, _) if x.is_generator() => write!(f, "{t}"),
        _ => write!(f, "({t})"),
    }
}

fn fmt_scalar(c: &Coeff, x: &ExprTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_negative() {
        write!(f, "- {} * ", fmt_coeff(&c.abs()))?;
    } else {
        write!(f, "{} * ", fmt_coeff(c))?;
    }
    fmt_operand(x, f)
}

/// Fully explicit text in the input grammar; `parse` reads it back to an
/// identical tree for trees the parser can produce.
impl fmt::Display for ExprTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprTree::Zero => f.write_str("0"),
            ExprTree::Generator(i) => write!(f, "x{i}"),
            ExprTree::Sum(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    match x {
                        ExprTree::Scalar(c, inner) if c.is_negative() => {
                            if k > 0 {
                                f.write_str(" ")?;
                            }
                            fmt_scalar(c, inner, f)?;
                        }
                        _ => {
                            if k > 0 {
                                f.write_str(" + ")?;
                            }
                            match x {
                                ExprTree::Sum(_) => write!(f, "({x})")?,
                                _ => write!(f, "{x}")?,
                            }
                        }
                    }
                }
                Ok(())
            }
            ExprTree::Scalar(c, x) => fmt_scalar(c, x, f),
            ExprTree::Product(l, r) => {
                fmt_operand(l, f)?;
                f.write_str(" * ")?;
                fmt_operand(r, f)
            }
            ExprTree::Power(x, k) => {
                if x.is_generator() {
                    write!(f, "{x}^{k}")
                } else {
                    write!(f, "({x})^{k}")
                }
            }
        }
    }
}
