//! Expression grammar.
//!
//! ```text
//! expr     := ['+' | '-'] term (('+' | '-') term)*
//! term     := rational ['*'] product | rational | product
//! product  := juxt ['*' juxt]
//! juxt     := powered powered*          (right-nested: a b c = a(b c))
//! powered  := primary ['^' int]
//! primary  := generator | '(' expr ')'
//! rational := int ['/' int]
//! generator:= 'x' int
//! ```
//!
//! `*` is the nonassociative product, so `a * b * c` is rejected: write
//! `(a * b) * c` or `a * (b * c)`. A bare rational term is only allowed
//! when it is zero.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::freealg::{Coeff, ExprTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Gen(u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    let err = |line, column, message: String| ParseError {
        line,
        column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let digits_from = |start: usize| {
            let mut j = start;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            j
        };
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'x' => {
                let end = digits_from(i + 1);
                if end == i + 1 {
                    return Err(err(l0, c0, "expected generator index after 'x'".into()));
                }
                let s: String = chars[i + 1..end].iter().collect();
                let idx: u32 = s
                    .parse()
                    .map_err(|_| err(l0, c0, format!("generator index {s} is too large")))?;
                if idx == 0 {
                    return Err(err(l0, c0, "generator indices start at 1 (found x0)".into()));
                }
                column += end - i;
                i = end;
                out.push(Token {
                    tok: Tok::Gen(idx),
                    line: l0,
                    column: c0,
                });
                continue;
            }
            d if d.is_ascii_digit() => {
                let end = digits_from(i);
                let s: String = chars[i..end].iter().collect();
                column += end - i;
                i = end;
                out.push(Token {
                    tok: Tok::Int(s.parse().expect("digits")),
                    line: l0,
                    column: c0,
                });
                continue;
            }
            other => return Err(err(l0, c0, format!("unexpected character '{other}'"))),
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
        column += 1;
        i += 1;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn starts_juxt(&self) -> bool {
        matches!(self.peek(), Tok::Gen(_) | Tok::LParen)
    }

    fn expr(&mut self) -> Result<ExprTree, ParseError> {
        let mut neg = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut terms = Vec::new();
        loop {
            terms.push(self.term(neg)?);
            match self.peek() {
                Tok::Plus => neg = false,
                Tok::Minus => neg = true,
                _ => break,
            }
            self.bump();
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            ExprTree::Sum(terms)
        })
    }

    fn term(&mut self, neg: bool) -> Result<ExprTree, ParseError> {
        if let Tok::Int(_) = self.peek() {
            let r = self.rational()?;
            let r = if neg { -r } else { r };
            let star = *self.peek() == Tok::Star;
            if star {
                self.bump();
            }
            if self.starts_juxt() {
                let p = self.product()?;
                return Ok(ExprTree::scalar(r, p));
            }
            if star {
                return self.error("expected a generator or '(' after '*'");
            }
            if r.is_zero() {
                return Ok(ExprTree::Zero);
            }
            return self.error("a nonzero number alone is not an algebra element");
        }
        if !self.starts_juxt() {
            return self.error("expected a term");
        }
        let p = self.product()?;
        Ok(if neg { ExprTree::neg(p) } else { p })
    }

    fn rational(&mut self) -> Result<Coeff, ParseError> {
        let Tok::Int(num) = self.bump().tok else {
            unreachable!("caller checked for an integer");
        };
        if *self.peek() != Tok::Slash {
            return Ok(Coeff::from_integer(num));
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(den) if den.is_zero() => self.error("division by zero"),
            Tok::Int(den) => {
                self.bump();
                Ok(Coeff::new(num, den))
            }
            _ => self.error("expected a denominator"),
        }
    }

    fn product(&mut self) -> Result<ExprTree, ParseError> {
        let left = self.juxt()?;
        if *self.peek() != Tok::Star {
            return Ok(left);
        }
        self.bump();
        if matches!(self.peek(), Tok::Int(_)) {
            return self.error("scalar coefficients must come first in a term");
        }
        let right = self.juxt()?;
        if *self.peek() == Tok::Star {
            return self.error(
                "the product is not associative; parenthesize chains like (a * b) * c",
            );
        }
        Ok(ExprTree::product(left, right))
    }

    fn juxt(&mut self) -> Result<ExprTree, ParseError> {
        let mut items = vec![self.powered()?];
        while self.starts_juxt() {
            items.push(self.powered()?);
        }
        let mut acc = items.pop().expect("nonempty");
        while let Some(l) = items.pop() {
            acc = ExprTree::product(l, acc);
        }
        Ok(acc)
    }

    fn powered(&mut self) -> Result<ExprTree, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let exp = match self.peek().clone() {
            Tok::Int(k) if k.is_zero() => {
                return self.error("exponent must be at least 1 (the algebra has no unit)")
            }
            Tok::Int(k) => match k.to_u32() {
                Some(k) => k,
                None => return self.error("exponent is too large"),
            },
            _ => return self.error("expected an exponent"),
        };
        self.bump();
        if *self.peek() == Tok::Caret {
            return self.error("parenthesize repeated powers like (a^2)^3");
        }
        Ok(ExprTree::power(base, exp))
    }

    fn primary(&mut self) -> Result<ExprTree, ParseError> {
        match self.peek().clone() {
            Tok::Gen(i) => {
                self.bump();
                Ok(ExprTree::gen(i))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(e)
            }
            _ => self.error("expected a generator or '('"),
        }
    }
}

/// Parses an expression in the grammar above.
pub fn parse(text: &str) -> Result<ExprTree, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}
