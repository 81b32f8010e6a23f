//! Elaboration of parsed declarations into a character system and
//! representations, and canonical rendering back to text.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Rational64;

use crate::catalog::{canonical_system, Branch, CatalogError, ReprSpec, ReprType};
use crate::chars::{CharError, CharSystem, CharSystemBuilder, Character, Ramification};

use super::lexer::{lex, Pos};
use super::parser::parse;
use super::{BesselDecl, CharAst, DslError, ErrorKind, GenDecl, Query, RelationDecl, ReprDecl};

#[derive(Clone, Debug)]
pub struct Session {
    /// `None` when the standard generators are used.
    pub generators: Option<Vec<GenDecl>>,
    pub relations: Vec<RelationDecl>,
    pub reprs: Vec<ReprDecl>,
    pub bessels: Vec<BesselDecl>,
    pub queries: Vec<Query>,
    system: Arc<CharSystem>,
    specs: BTreeMap<String, ReprSpec>,
    rhos: BTreeMap<String, Character>,
}

impl PartialEq for Session {
    fn eq(&self, o: &Self) -> bool {
        self.generators == o.generators
            && self.relations == o.relations
            && self.reprs == o.reprs
            && self.bessels == o.bessels
            && self.queries == o.queries
    }
}

impl Eq for Session {}

fn char_error(e: CharError, pos: Pos, token: &str) -> DslError {
    let kind = match e {
        CharError::UnknownGenerator(_) => ErrorKind::UnknownGenerator,
        CharError::BadExpression(_) => ErrorKind::Syntax,
        _ => ErrorKind::ConstraintViolation,
    };
    DslError::new(kind, pos, token, e.to_string())
}

/// Resolve `ast` against generator names, `nu`, and (if given) named
/// Bessel characters. Only `nu` takes non-integral exponents.
fn resolve(ast: &CharAst, gens: &[String], rhos: Option<&BTreeMap<String, Character>>) -> Result<Character, DslError> {
    let mut acc = Character::trivial();
    for (k, (name, e)) in ast.factors.iter().enumerate() {
        let pos = ast.factor_pos.get(k).copied().unwrap_or(ast.pos);
        if name == "nu" {
            acc = acc.twist_nu(*e);
            continue;
        }
        if !e.is_integer() {
            return Err(DslError::new(ErrorKind::Syntax, pos, name, "only nu takes fractional exponents"));
        }
        let base = if let Some(i) = gens.iter().position(|g| g == name) {
            let mut exps = vec![0; i + 1];
            exps[i] = 1;
            Character::from_parts(exps, Rational64::from_integer(0))
        } else if let Some(c) = rhos.and_then(|m| m.get(name)) {
            c.clone()
        } else {
            return Err(DslError::new(ErrorKind::UnknownGenerator, pos, name, format!("`{name}` is not declared")));
        };
        acc = acc.times(&base.pow(*e.numer()));
    }
    Ok(acc)
}

pub fn parse_session(text: &str) -> Result<Session, DslError> {
    let ast = parse(lex(text)?)?;
    let mut builder: CharSystemBuilder = match &ast.gens {
        None => canonical_system(Branch::GenericPosition)
            .map_err(|e| char_error(e, Pos::default(), ""))?
            .extend(),
        Some(gens) => {
            let mut b = CharSystem::builder();
            for (g, pos) in gens {
                let r = if g.ramified { Ramification::Ramified } else { Ramification::Unramified };
                b.generator(&g.name, r, g.order).map_err(|e| char_error(e, *pos, &g.name))?;
            }
            b
        }
    };
    let names: Vec<String> = builder.generators().iter().map(|g| g.name.clone()).collect();
    if names.iter().any(|n| n == "nu") {
        return Err(DslError::new(ErrorKind::Syntax, Pos::default(), "nu", "`nu` is reserved"));
    }
    let mut system = builder.build().map_err(|e| char_error(e, Pos::default(), ""))?;
    for rel in &ast.relations {
        let l = resolve(&rel.lhs, &names, None)?;
        let r = resolve(&rel.rhs, &names, None)?;
        if rel.equal {
            builder.relation(l, r);
        } else {
            builder.disequality(l, r);
        }
        // Built after each relation so that an error points at its cause.
        system = builder.build().map_err(|e| char_error(e, rel.lhs.pos, &rel.lhs.render()))?;
    }
    let system = Arc::new(system);

    let clash = |n: &str, pos: Pos| -> Result<(), DslError> {
        if n == "nu" || names.iter().any(|g| g == n) {
            return Err(DslError::new(ErrorKind::Syntax, pos, n, "name clashes with a generator"));
        }
        Ok(())
    };
    let mut rhos: BTreeMap<String, Character> = BTreeMap::new();
    for b in &ast.bessels {
        clash(&b.name, b.pos)?;
        if rhos.contains_key(&b.name) {
            return Err(DslError::new(ErrorKind::Syntax, b.pos, &b.name, "duplicate name"));
        }
        let c = resolve(&b.rho, &names, Some(&rhos))?;
        rhos.insert(b.name.clone(), system.normalize(&c));
    }
    let mut specs: BTreeMap<String, ReprSpec> = BTreeMap::new();
    for r in &ast.reprs {
        clash(&r.name, r.pos)?;
        if specs.contains_key(&r.name) || rhos.contains_key(&r.name) {
            return Err(DslError::new(ErrorKind::Syntax, r.pos, &r.name, "duplicate name"));
        }
        let ty: ReprType = r
            .ty
            .parse()
            .map_err(|e: CatalogError| DslError::new(ErrorKind::UnknownType, r.ty_pos, &r.ty, e.to_string()))?;
        let args = r.args.iter().map(|a| resolve(a, &names, Some(&rhos))).collect::<Result<Vec<_>, _>>()?;
        let spec = ReprSpec::new(ty, args, Arc::clone(&system))
            .map_err(|e| DslError::new(ErrorKind::ConstraintViolation, r.ty_pos, &r.ty, e.to_string()))?;
        specs.insert(r.name.clone(), spec);
    }
    Ok(Session {
        generators: ast.gens.map(|g| g.into_iter().map(|(d, _)| d).collect()),
        relations: ast.relations,
        reprs: ast.reprs,
        bessels: ast.bessels,
        queries: ast.queries,
        system,
        specs,
        rhos,
    })
}

impl Session {
    pub fn system(&self) -> &CharSystem {
        &self.system
    }

    pub fn repr(&self, name: &str) -> Option<&ReprSpec> {
        self.specs.get(name)
    }

    pub fn bessel(&self, name: &str) -> Option<&Character> {
        self.rhos.get(name)
    }

    /// Evaluate a query argument as a character; Bessel names may appear as
    /// factors.
    pub fn eval_char(&self, ast: &CharAst) -> Result<Character, DslError> {
        let names: Vec<String> = self.system.generators().iter().map(|g| g.name.clone()).collect();
        let c = resolve(ast, &names, Some(&self.rhos))?;
        Ok(self.system.normalize(&c))
    }

    /// Canonical text: generators, relations, Bessel data, representations,
    /// then queries in their original order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(gens) = &self.generators {
            out.push_str("chars {\n");
            for g in gens {
                let r = if g.ramified { "ramified" } else { "unramified" };
                match g.order {
                    Some(n) => out.push_str(&format!("    {}: {r} order {n};\n", g.name)),
                    None => out.push_str(&format!("    {}: {r};\n", g.name)),
                }
            }
            out.push_str("}\n");
        }
        if !self.relations.is_empty() {
            out.push_str("relations {\n");
            for r in &self.relations {
                let op = if r.equal { "=" } else { "!=" };
                out.push_str(&format!("    {} {op} {};\n", r.lhs.render(), r.rhs.render()));
            }
            out.push_str("}\n");
        }
        for b in &self.bessels {
            out.push_str(&format!("bessel {} = {};\n", b.name, b.rho.render()));
        }
        for r in &self.reprs {
            let args: Vec<String> = r.args.iter().map(CharAst::render).collect();
            out.push_str(&format!("repr {} = {}({});\n", r.name, r.ty, args.join(", ")));
        }
        for q in &self.queries {
            out.push_str(&format!("compute {};\n", q.render()));
        }
        out
    }
}
