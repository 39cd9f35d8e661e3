//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when the checked property or identity is
//! false, 2 on usage or input errors. Diagnostics go to stderr.

mod parse;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::Error;
use crate::eval::{descent_report, theorem1_rank, LambdaTuple};
use crate::freealg::{normal_form, Coeff, Element};
use crate::identities::{
    is_identity_one_generated, is_identity_variety, nil_lab, symmetrization_check,
};

pub use parse::{parse, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "zinbiel",
    version,
    about = "Exact computations in free Zinbiel (dual Leibniz) algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce an expression to left-normed normal form by rewriting.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Left power f^n, with f^(i+1) = f f^i.
    Power {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        exponent: u32,
    },
    /// Symmetrized product f*g = fg + gf.
    Star {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Is expr = 0 an identity of every Zinbiel algebra?
    IdentityCheck {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Is expr = 0 an identity of the one-generated free algebra?
    #[command(name = "identity-check-1gen")]
    IdentityCheck1Gen {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Largest weight tried when searching for a witness.
        #[arg(long, default_value_t = 6)]
        max_weight: u64,
    },
    /// Certify that the one-generated algebra has no multilinear identity of
    /// the given degree.
    #[command(name = "theorem1-verify")]
    Theorem1Verify {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Largest weight in the enumerated tuples.
        #[arg(long, default_value_t = 8)]
        max_weight: u64,
    },
    /// Check the descent step λ_n Q_n |_(λ_n=0) = Q_(n-1) for a prefix of
    /// positive weights, e.g. `descent-check 3,4`.
    DescentCheck {
        #[arg(value_delimiter = ',', required = true, num_args = 1..)]
        prefix: Vec<u64>,
    },
    /// Multilinear consequences of x^t = 0, degree by degree.
    NilLab {
        #[arg(long, default_value_t = 2)]
        nil_index: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Check that f*g = fg + gf is commutative and associative on basis words.
    Symcheck {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
}

/// Result of running a command: exit status and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn coeff_json(c: &Coeff) -> Value {
    json!(c.to_string())
}

fn ratio_fields(c: &Coeff) -> (String, String) {
    (c.numer().to_string(), c.denom().to_string())
}

/// `{"terms":[{"word":[…],"num":"…","den":"…"}]}`.
pub fn element_json(e: &Element) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(w, c)| {
            let (num, den) = ratio_fields(c);
            json!({ "word": w.letters(), "num": num, "den": den })
        })
        .collect();
    json!({ "terms": terms })
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn read(text: &str) -> Result<Element, Outcome> {
    let tree = parse(text).map_err(|e| Outcome::usage(format!("parse error at {e}")))?;
    normal_form(&tree).map_err(Outcome::usage)
}

fn element_outcome(e: &Element, format: Format) -> Outcome {
    Outcome::ok(match format {
        Format::Text => format!("{e}\n"),
        Format::Json => render(&element_json(e)),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let format = cli.format;
    Ok(match &cli.command {
        Command::Reduce { expr } => element_outcome(&read(expr)?, format),
        Command::Mul { left, right } => element_outcome(&read(left)?.mul(&read(right)?), format),
        Command::Star { left, right } => {
            element_outcome(&read(left)?.star(&read(right)?), format)
        }
        Command::Power { expr, exponent } => {
            let p = read(expr)?
                .power(*exponent as usize)
                .map_err(Outcome::usage)?;
            element_outcome(&p, format)
        }
        Command::IdentityCheck { expr } => identity_check(expr, format)?,
        Command::IdentityCheck1Gen { expr, max_weight } => {
            identity_check_1gen(expr, *max_weight, format)?
        }
        Command::Theorem1Verify { degree, max_weight } => {
            theorem1_verify(*degree, *max_weight, format)?
        }
        Command::DescentCheck { prefix } => descent(prefix, format)?,
        Command::NilLab {
            nil_index,
            max_degree,
        } => nil(*nil_index, *max_degree, format)?,
        Command::Symcheck { max_degree } => {
            let ok = symmetrization_check(*max_degree).map_err(Outcome::usage)?;
            let out = match format {
                Format::Text if ok => format!(
                    "star is commutative and associative on basis words up to degree {max_degree}\n"
                ),
                Format::Text => format!("star check failed up to degree {max_degree}\n"),
                Format::Json => render(&json!({ "max_degree": max_degree, "holds": ok })),
            };
            Outcome::with_code(if ok { EXIT_OK } else { EXIT_FALSE }, out)
        }
    })
}

fn identity_check(expr: &str, format: Format) -> Result<Outcome, Outcome> {
    let tree = parse(expr).map_err(|e| Outcome::usage(format!("parse error at {e}")))?;
    let holds = is_identity_variety(&tree).map_err(Outcome::usage)?;
    let nf = normal_form(&tree).map_err(Outcome::usage)?;
    let out = match format {
        Format::Text if holds => "identity\n".to_string(),
        Format::Text => format!("not an identity: reduces to {nf}\n"),
        Format::Json => render(&json!({ "identity": holds, "normal_form": element_json(&nf) })),
    };
    Ok(Outcome::with_code(if holds { EXIT_OK } else { EXIT_FALSE }, out))
}

fn identity_check_1gen(expr: &str, max_weight: u64, format: Format) -> Result<Outcome, Outcome> {
    let tree = parse(expr).map_err(|e| Outcome::usage(format!("parse error at {e}")))?;
    let verdict = match is_identity_one_generated(&tree, max_weight) {
        Ok(v) => v,
        Err(e @ Error::InconclusiveEvaluation { .. }) => {
            return Err(Outcome {
                code: EXIT_FALSE,
                stdout: String::new(),
                stderr: format!("not an identity (nonzero normal form), but {e}\n"),
            })
        }
        Err(e) => return Err(Outcome::usage(e)),
    };
    let out = match (format, &verdict.witness) {
        (Format::Text, None) => "identity in the one-generated algebra\n".to_string(),
        (Format::Text, Some(w)) => format!(
            "not an identity: component {} ({}) maps to {} X{} at λ = {}\n",
            w.component,
            w.multilinear,
            w.witness.value,
            w.witness.lambda.total(),
            w.witness.lambda,
        ),
        (Format::Json, w) => {
            let witness = w.as_ref().map(|w| {
                json!({
                    "component": w.component,
                    "multilinear": element_json(&w.multilinear.to_element()),
                    "lambda": w.witness.lambda.weights(),
                    "value": w.witness.value.to_string(),
                })
            });
            render(&json!({
                "identity": verdict.holds,
                "normal_form": element_json(&verdict.normal_form),
                "witness": witness,
            }))
        }
    };
    Ok(Outcome::with_code(
        if verdict.holds { EXIT_OK } else { EXIT_FALSE },
        out,
    ))
}

fn theorem1_verify(degree: usize, max_weight: u64, format: Format) -> Result<Outcome, Outcome> {
    if degree == 0 {
        return Err(Outcome::usage("--degree must be at least 1"));
    }
    if max_weight == 0 {
        return Err(Outcome::usage("--max-weight must be at least 1"));
    }
    let cert = theorem1_rank(degree, max_weight);
    let out = match format {
        Format::Text => {
            let mut s = format!(
                "degree {}: rank {} of {} over {} tuples with weights <= {}",
                cert.degree, cert.rank, cert.full_rank, cert.tuples_examined, cert.max_weight
            );
            s.push_str(if cert.certified() {
                " (certified)\n"
            } else {
                " (not certified)\n"
            });
            let _ = writeln!(s, "witnesses: {}", cert.witnesses.iter().join(" "));
            if let Some(d) = &cert.determinant {
                let _ = writeln!(s, "determinant: {d}");
            }
            s
        }
        Format::Json => render(&json!({
            "degree": cert.degree,
            "rank": cert.rank,
            "full_rank": cert.full_rank,
            "certified": cert.certified(),
            "max_weight": cert.max_weight,
            "tuples_examined": cert.tuples_examined,
            "witnesses": cert.witnesses.iter().map(|w| w.weights().to_vec()).collect::<Vec<_>>(),
            "determinant": cert.determinant.as_ref().map(coeff_json),
        })),
    };
    Ok(Outcome::with_code(
        if cert.certified() { EXIT_OK } else { EXIT_FALSE },
        out,
    ))
}

fn descent(prefix: &[u64], format: Format) -> Result<Outcome, Outcome> {
    let prefix = LambdaTuple::new(prefix.to_vec()).map_err(Outcome::usage)?;
    let r = descent_report(&prefix);
    let holds = r.holds();
    let out = match format {
        Format::Text => format!(
            "n = {}: λ_n Q_n at λ_n = 0 is {}, Q_(n-1) is {}; divisibility {} on {} permutations\n{}\n",
            r.degree,
            r.limit,
            r.expected,
            if r.divisibility_ok { "holds" } else { "fails" },
            r.permutations_checked,
            if holds { "holds" } else { "fails" },
        ),
        Format::Json => render(&json!({
            "degree": r.degree,
            "prefix": prefix.weights(),
            "limit": r.limit.to_string(),
            "expected": r.expected.to_string(),
            "permutations_checked": r.permutations_checked,
            "divisibility_ok": r.divisibility_ok,
            "holds": holds,
        })),
    };
    Ok(Outcome::with_code(if holds { EXIT_OK } else { EXIT_FALSE }, out))
}

fn nil(t: usize, d_max: usize, format: Format) -> Result<Outcome, Outcome> {
    let report = nil_lab(t, d_max).map_err(Outcome::usage)?;
    let out = match format {
        Format::Text => {
            let mut s = format!("consequences of x^{t} = 0\n");
            for r in &report.records {
                let _ = writeln!(
                    s,
                    "degree {}: {} of {}",
                    r.degree, r.dimension, r.full_dimension
                );
            }
            match report.nilpotency_degree {
                Some(d) => {
                    let _ = writeln!(s, "nilpotent: every product of degree {d} vanishes");
                }
                None => {
                    let _ = writeln!(s, "not reached by degree {d_max}");
                }
            }
            s
        }
        Format::Json => render(&json!({
            "nil_index": t,
            "max_degree": d_max,
            "degrees": report.records.iter().map(|r| json!({
                "degree": r.degree,
                "dimension": r.dimension,
                "full_dimension": r.full_dimension,
            })).collect::<Vec<_>>(),
            "nilpotency_degree": report.nilpotency_degree,
        })),
    };
    Ok(Outcome::ok(out))
}
