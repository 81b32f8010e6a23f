//! Recursive descent over the token stream; builds declarations without
//! resolving any names.

use num_rational::Rational64;

use super::lexer::{Pos, Tok, Token};
use super::{BesselDecl, CharAst, DslError, ErrorKind, GenDecl, Query, RelationDecl, ReprDecl, VERBS};

#[derive(Debug, Default)]
pub(super) struct Ast {
    /// `None` when the input has no `chars` block.
    pub gens: Option<Vec<(GenDecl, Pos)>>,
    pub relations: Vec<RelationDecl>,
    pub reprs: Vec<ReprDecl>,
    pub bessels: Vec<BesselDecl>,
    pub queries: Vec<Query>,
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
}

pub(super) fn parse(toks: Vec<Token>) -> Result<Ast, DslError> {
    let mut p = Parser { toks, i: 0 };
    let mut ast = Ast::default();
    loop {
        let t = p.peek().clone();
        match &t.tok {
            Tok::Eof => return Ok(ast),
            Tok::Ident(kw) if kw == "chars" => {
                p.bump();
                let gens = p.chars_block()?;
                ast.gens.get_or_insert_with(Vec::new).extend(gens);
            }
            Tok::Ident(kw) if kw == "relations" => {
                p.bump();
                let rels = p.relations_block()?;
                ast.relations.extend(rels);
            }
            Tok::Ident(kw) if kw == "repr" => {
                p.bump();
                ast.reprs.push(p.repr()?);
            }
            Tok::Ident(kw) if kw == "bessel" => {
                p.bump();
                let (name, pos) = p.ident("a Bessel datum name")?;
                p.punct('=')?;
                let rho = p.char_expr()?;
                p.punct(';')?;
                ast.bessels.push(BesselDecl { name, rho, pos });
            }
            Tok::Ident(kw) if kw == "compute" => {
                p.bump();
                ast.queries.push(p.query()?);
            }
            _ => return Err(p.error("expected `chars`, `relations`, `repr`, `bessel` or `compute`")),
        }
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.i]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error(&self, msg: &str) -> DslError {
        let t = self.peek();
        DslError::new(ErrorKind::Syntax, t.pos, &t.tok.text(), msg)
    }

    fn at_punct(&self, c: char) -> bool {
        self.peek().tok == Tok::Punct(c)
    }

    fn punct(&mut self, c: char) -> Result<Pos, DslError> {
        if self.at_punct(c) {
            Ok(self.bump().pos)
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), DslError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump().pos))
            }
            _ => Err(self.error(&format!("expected {what}"))),
        }
    }

    fn int(&mut self) -> Result<i64, DslError> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn chars_block(&mut self) -> Result<Vec<(GenDecl, Pos)>, DslError> {
        self.punct('{')?;
        let mut out = Vec::new();
        while !self.at_punct('}') {
            let (name, pos) = self.ident("a generator name")?;
            self.punct(':')?;
            let ramified = match &self.peek().tok {
                Tok::Ident(s) if s == "unramified" => false,
                Tok::Ident(s) if s == "ramified" => true,
                _ => return Err(self.error("expected `unramified` or `ramified`")),
            };
            self.bump();
            let mut order = None;
            if matches!(&self.peek().tok, Tok::Ident(s) if s == "order") {
                self.bump();
                let n = self.int()?;
                order = Some(u32::try_from(n).map_err(|_| self.error("order out of range"))?);
            }
            self.punct(';')?;
            out.push((GenDecl { name, ramified, order }, pos));
        }
        self.punct('}')?;
        Ok(out)
    }

    fn relations_block(&mut self) -> Result<Vec<RelationDecl>, DslError> {
        self.punct('{')?;
        let mut out = Vec::new();
        while !self.at_punct('}') {
            let lhs = self.char_expr()?;
            let equal = match self.peek().tok {
                Tok::Punct('=') => true,
                Tok::Ne => false,
                _ => return Err(self.error("expected `=` or `!=`")),
            };
            self.bump();
            let rhs = self.char_expr()?;
            self.punct(';')?;
            out.push(RelationDecl { lhs, rhs, equal });
        }
        self.punct('}')?;
        Ok(out)
    }

    fn repr(&mut self) -> Result<ReprDecl, DslError> {
        let (name, pos) = self.ident("a representation name")?;
        self.punct('=')?;
        let (ty, ty_pos) = self.ident("a type tag")?;
        let args = self.arg_list()?;
        self.punct(';')?;
        Ok(ReprDecl { name, ty, args, pos, ty_pos })
    }

    fn query(&mut self) -> Result<Query, DslError> {
        let (verb, pos) = self.ident("a query verb")?;
        if !VERBS.contains(&verb.as_str()) {
            return Err(DslError::new(
                ErrorKind::Syntax,
                pos,
                &verb,
                format!("unknown verb, expected one of {}", VERBS.join(", ")),
            ));
        }
        let args = self.arg_list()?;
        self.punct(';')?;
        Ok(Query { verb, args, pos })
    }

    fn arg_list(&mut self) -> Result<Vec<CharAst>, DslError> {
        self.punct('(')?;
        let mut args = Vec::new();
        if !self.at_punct(')') {
            args.push(self.char_expr()?);
            while self.at_punct(',') {
                self.bump();
                args.push(self.char_expr()?);
            }
        }
        self.punct(')')?;
        Ok(args)
    }

    /// `factor ("*" factor)*`, where a factor is `1` or `name` with an
    /// optional exponent `^n`, `^-n` or `^{a/b}`.
    fn char_expr(&mut self) -> Result<CharAst, DslError> {
        let pos = self.peek().pos;
        let mut factors = Vec::new();
        let mut factor_pos = Vec::new();
        loop {
            match self.peek().tok.clone() {
                Tok::Int(1) => {
                    self.bump();
                }
                Tok::Ident(name) => {
                    let p = self.bump().pos;
                    let e = if self.at_punct('^') {
                        self.bump();
                        self.exponent()?
                    } else {
                        Rational64::from_integer(1)
                    };
                    factors.push((name, e));
                    factor_pos.push(p);
                }
                _ => return Err(self.error("expected a character (`1`, a generator, or `nu`)")),
            }
            if self.at_punct('*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok(CharAst { factors, pos, factor_pos })
    }

    fn exponent(&mut self) -> Result<Rational64, DslError> {
        let braced = self.at_punct('{');
        if braced {
            self.bump();
        }
        let neg = self.at_punct('-');
        if neg {
            self.bump();
        }
        let n = self.int()?;
        let mut d = 1;
        if braced && self.at_punct('/') {
            self.bump();
            d = self.int()?;
            if d == 0 {
                return Err(self.error("zero denominator"));
            }
        }
        if braced {
            self.punct('}')?;
        } else if self.at_punct('/') {
            return Err(self.error("rational exponents need braces, as in `nu^{1/2}`"));
        }
        Ok(Rational64::new(if neg { -n } else { n }, d))
    }
}
