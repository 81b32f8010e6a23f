//! Session files: character systems, representations, Bessel data and
//! queries, with text and JSON reports.
//!
//! ```text
//! chars { sigma: unramified; xi: unramified order 2; }
//! relations { sigma^2 = nu; }
//! repr P = IVa(sigma);
//! bessel r = sigma;
//! compute lfactor(P, r);
//! ```
//!
//! Relations also accept `!=`. A session without a `chars` block uses the
//! standard generators `chi1 chi2 chi xi eta omega_pi sigma tau mu`, with `xi`
//! and `eta` of order 2.

mod lexer;
mod parser;
mod report;
mod session;

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

pub use lexer::Pos;
pub use report::{evaluate, NumericOptions, QueryResult, Report};
pub use session::{parse_session, Session};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    UnknownGenerator,
    UnknownType,
    UnknownName,
    ConstraintViolation,
    NoBesselModel,
    Evaluation,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorKind::Syntax => "SyntaxError",
            ErrorKind::UnknownGenerator => "UnknownGenerator",
            ErrorKind::UnknownType => "UnknownType",
            ErrorKind::UnknownName => "UnknownName",
            ErrorKind::ConstraintViolation => "ConstraintViolation",
            ErrorKind::NoBesselModel => "NoBesselModel",
            ErrorKind::Evaluation => "EvaluationError",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}: {message} (at `{token}`)")]
pub struct DslError {
    pub kind: ErrorKind,
    pub line: usize,
    pub col: usize,
    pub token: String,
    pub message: String,
}

impl DslError {
    pub(crate) fn new(kind: ErrorKind, pos: Pos, token: &str, message: impl Into<String>) -> Self {
        DslError { kind, line: pos.line, col: pos.col, token: token.to_string(), message: message.into() }
    }
}

/// A character expression as written: a product of `name^e` factors.
/// Positions are ignored by equality.
#[derive(Clone, Debug)]
pub struct CharAst {
    pub factors: Vec<(String, Rational64)>,
    pub pos: Pos,
    pub(crate) factor_pos: Vec<Pos>,
}

impl PartialEq for CharAst {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for CharAst {}

impl CharAst {
    /// The bare identifier, if the expression is one.
    pub fn as_name(&self) -> Option<&str> {
        match self.factors.as_slice() {
            [(n, e)] if *e == Rational64::from_integer(1) => Some(n),
            _ => None,
        }
    }

    pub fn render(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(n, e)| {
                if *e == Rational64::from_integer(1) {
                    n.clone()
                } else if e.is_integer() && *e.numer() > 0 {
                    format!("{n}^{}", e.numer())
                } else {
                    format!("{n}^{{{e}}}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub ramified: bool,
    pub order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationDecl {
    pub lhs: CharAst,
    pub rhs: CharAst,
    /// `false` for `!=`.
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct ReprDecl {
    pub name: String,
    pub ty: String,
    pub args: Vec<CharAst>,
    pub pos: Pos,
    pub ty_pos: Pos,
}

impl PartialEq for ReprDecl {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name && self.ty == o.ty && self.args == o.args
    }
}

impl Eq for ReprDecl {}

#[derive(Clone, Debug)]
pub struct BesselDecl {
    pub name: String,
    pub rho: CharAst,
    pub pos: Pos,
}

impl PartialEq for BesselDecl {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name && self.rho == o.rho
    }
}

impl Eq for BesselDecl {}

pub const VERBS: &[&str] = &["lfactor", "sreg", "homdim", "delta", "zeta", "euler", "verify"];

#[derive(Clone, Debug)]
pub struct Query {
    pub verb: String,
    pub args: Vec<CharAst>,
    pub pos: Pos,
}

impl PartialEq for Query {
    fn eq(&self, o: &Self) -> bool {
        self.verb == o.verb && self.args == o.args
    }
}

impl Eq for Query {}

impl Query {
    pub fn render(&self) -> String {
        format!("{}({})", self.verb, self.args.iter().map(CharAst::render).collect::<Vec<_>>().join(", "))
    }
}
