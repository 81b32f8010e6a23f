//! Smooth characters of GL(1) as a finitely presented abelian group.
//!
//! A [`Character`] is `ν^a · ∏ g_i^{e_i}` over the generators of a
//! [`CharSystem`]. Equality is only meaningful after [`CharSystem::normalize`],
//! which reduces the exponent vector modulo the relation lattice.

mod expr;
mod hnf;
mod lfactor;
pub mod numeric;

use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use expr::parse_with;
pub use lfactor::LFactorProduct;

use hnf::{HermiteLattice, HnfError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("inconsistent relations: {0}")]
    InconsistentRelations(String),
    #[error("relation `{0}` mixes ramified generators with unramified characters")]
    MixedRamification(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("malformed character expression `{0}`")]
    BadExpression(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ramification {
    Unramified,
    Ramified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub ramification: Ramification,
    pub order: Option<u32>,
}

impl Generator {
    pub fn is_unramified(&self) -> bool {
        self.ramification == Ramification::Unramified
    }
}

/// Raw exponent data. Trailing zero generator exponents are trimmed so that
/// derived equality and ordering agree with the mathematical identity of
/// normalized characters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    exps: Vec<i64>,
    nu: Rational64,
}

impl Default for Character {
    fn default() -> Self {
        Character::trivial()
    }
}

impl Character {
    pub fn trivial() -> Self {
        Character { exps: Vec::new(), nu: Rational64::zero() }
    }

    pub fn nu(a: Rational64) -> Self {
        Character { exps: Vec::new(), nu: a }
    }

    /// `ν^{n/d}`.
    pub fn nu_frac(n: i64, d: i64) -> Self {
        Character::nu(Rational64::new(n, d))
    }

    pub fn from_parts(mut exps: Vec<i64>, nu: Rational64) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Character { exps, nu }
    }

    pub(crate) fn basis(index: usize) -> Self {
        let mut exps = vec![0; index + 1];
        exps[index] = 1;
        Character { exps, nu: Rational64::zero() }
    }

    pub fn nu_exponent(&self) -> Rational64 {
        self.nu
    }

    pub fn exponent(&self, index: usize) -> i64 {
        self.exps.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    /// Unreduced product.
    pub fn times(&self, other: &Character) -> Character {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Character::from_parts(exps, self.nu + other.nu)
    }

    pub fn inverse(&self) -> Character {
        Character { exps: self.exps.iter().map(|e| -e).collect(), nu: -self.nu }
    }

    pub fn pow(&self, k: i64) -> Character {
        Character::from_parts(self.exps.iter().map(|e| e * k).collect(), self.nu * Rational64::from_integer(k))
    }

    /// Multiply by `ν^a`.
    pub fn twist_nu(&self, a: Rational64) -> Character {
        Character { exps: self.exps.clone(), nu: self.nu + a }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty() && self.nu.is_zero()
    }
}

/// A set of generators together with relations and disequalities.
///
/// Immutable once built. Relations are kept as the `(lhs, rhs)` pairs they
/// were declared with, so sessions can be rendered back faithfully.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSystem {
    gens: Vec<Generator>,
    relations: Vec<(Character, Character)>,
    disequalities: Vec<(Character, Character)>,
    lattice: HermiteLattice,
    /// `g^d ≠ 1` for proper divisors `d` of a declared order.
    order_disequalities: Vec<Character>,
}

#[derive(Clone, Debug, Default)]
pub struct CharSystemBuilder {
    gens: Vec<Generator>,
    relations: Vec<(Character, Character)>,
    disequalities: Vec<(Character, Character)>,
}

impl CharSystemBuilder {
    pub fn generator(&mut self, name: &str, ramification: Ramification, order: Option<u32>) -> Result<Character, CharError> {
        if name == "nu" || self.gens.iter().any(|g| g.name == name) {
            return Err(CharError::DuplicateGenerator(name.to_string()));
        }
        let idx = self.gens.len();
        self.gens.push(Generator { name: name.to_string(), ramification, order });
        Ok(Character::basis(idx))
    }

    pub fn unramified(&mut self, name: &str) -> Result<Character, CharError> {
        self.generator(name, Ramification::Unramified, None)
    }

    pub fn gen(&self, name: &str) -> Result<Character, CharError> {
        lookup(&self.gens, name)
    }

    pub fn parse(&self, text: &str) -> Result<Character, CharError> {
        parse_with(text, |n| lookup(&self.gens, n).ok())
    }

    pub fn relation(&mut self, lhs: Character, rhs: Character) -> &mut Self {
        self.relations.push((lhs, rhs));
        self
    }

    pub fn disequality(&mut self, lhs: Character, rhs: Character) -> &mut Self {
        self.disequalities.push((lhs, rhs));
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn set_ramification(&mut self, name: &str, ramification: Ramification) -> Result<(), CharError> {
        let g = self
            .gens
            .iter_mut()
            .find(|g| g.name == name)
            .ok_or_else(|| CharError::UnknownGenerator(name.to_string()))?;
        g.ramification = ramification;
        Ok(())
    }

    pub fn build(&self) -> Result<CharSystem, CharError> {
        let width = self.gens.len();
        let mut rows: Vec<(Vec<i64>, Rational64)> = Vec::new();
        let mut diseq = Vec::new();

        for (i, g) in self.gens.iter().enumerate() {
            if let Some(n) = g.order {
                if n == 0 {
                    return Err(CharError::InconsistentRelations(format!("generator `{}` has order 0", g.name)));
                }
                let mut v = vec![0; width];
                v[i] = n as i64;
                rows.push((v, Rational64::zero()));
                for d in 1..n {
                    if n % d == 0 {
                        let c = Character::basis(i).pow(d as i64);
                        diseq.push(c);
                    }
                }
            }
        }
        for (lhs, rhs) in &self.relations {
            let q = lhs.times(&rhs.inverse());
            if q.exps.len() > width {
                return Err(CharError::UnknownGenerator(format!("#{}", q.exps.len() - 1)));
            }
            let ramified = q.exps.iter().enumerate().any(|(i, &e)| e != 0 && !self.gens[i].is_unramified());
            let unramified = !q.nu.is_zero()
                || q.exps.iter().enumerate().any(|(i, &e)| e != 0 && self.gens[i].is_unramified());
            if ramified && unramified {
                let text = format!("{} = {}", render_with(&self.gens, lhs), render_with(&self.gens, rhs));
                return Err(CharError::MixedRamification(text));
            }
            let mut v = q.exps.clone();
            v.resize(width, 0);
            rows.push((v, q.nu));
        }
        let lattice = HermiteLattice::new(width, &rows).map_err(|e| match e {
            HnfError::Degenerate(a) => CharError::InconsistentRelations(format!(
                "the relations force {} = 1",
                render_with(&[], &Character::nu(a))
            )),
            HnfError::Overflow => CharError::InconsistentRelations("exponent overflow while reducing relations".into()),
        })?;
        let sys = CharSystem {
            gens: self.gens.clone(),
            relations: self.relations.clone(),
            disequalities: self.disequalities.clone(),
            lattice,
            order_disequalities: diseq,
        };
        for (lhs, rhs) in &self.disequalities {
            if sys.equals(lhs, rhs) {
                return Err(CharError::InconsistentRelations(format!(
                    "{} != {} contradicts the relations",
                    sys.render(lhs),
                    sys.render(rhs)
                )));
            }
        }
        for c in &sys.order_disequalities {
            if sys.is_trivial(c) {
                return Err(CharError::InconsistentRelations(format!(
                    "{} = 1 contradicts the declared order",
                    sys.render(c)
                )));
            }
        }
        Ok(sys)
    }
}

fn lookup(gens: &[Generator], name: &str) -> Result<Character, CharError> {
    if name == "nu" {
        return Ok(Character::nu(Rational64::one()));
    }
    gens.iter()
        .position(|g| g.name == name)
        .map(Character::basis)
        .ok_or_else(|| CharError::UnknownGenerator(name.to_string()))
}

impl CharSystem {
    pub fn builder() -> CharSystemBuilder {
        CharSystemBuilder::default()
    }

    /// A builder preloaded with this system's declarations.
    pub fn extend(&self) -> CharSystemBuilder {
        CharSystemBuilder {
            gens: self.gens.clone(),
            relations: self.relations.clone(),
            disequalities: self.disequalities.clone(),
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn relations(&self) -> &[(Character, Character)] {
        &self.relations
    }

    pub fn disequalities(&self) -> &[(Character, Character)] {
        &self.disequalities
    }

    /// Declared disequalities together with those implied by generator orders.
    pub fn all_disequalities(&self) -> impl Iterator<Item = (Character, Character)> + '_ {
        self.disequalities
            .iter()
            .cloned()
            .chain(self.order_disequalities.iter().map(|c| (c.clone(), Character::trivial())))
    }

    pub fn gen(&self, name: &str) -> Result<Character, CharError> {
        lookup(&self.gens, name)
    }

    /// Parse a character expression such as `nu^{1/2}*chi^{-1}*sigma`.
    pub fn parse(&self, text: &str) -> Result<Character, CharError> {
        parse_with(text, |n| lookup(&self.gens, n).ok()).map(|c| self.normalize(&c))
    }

    pub fn check(&self, x: &Character) -> Result<(), CharError> {
        if x.exps.len() > self.gens.len() {
            return Err(CharError::UnknownGenerator(format!("#{}", x.exps.len() - 1)));
        }
        Ok(())
    }

    pub fn normalize(&self, x: &Character) -> Character {
        let mut exps = x.exps.clone();
        let mut nu = x.nu;
        self.lattice.reduce(&mut exps, &mut nu);
        Character::from_parts(exps, nu)
    }

    pub fn mul(&self, a: &Character, b: &Character) -> Character {
        self.normalize(&a.times(b))
    }

    /// Normalized product of any number of factors.
    pub fn prod<'a>(&self, xs: impl IntoIterator<Item = &'a Character>) -> Character {
        let raw = xs.into_iter().fold(Character::trivial(), |acc, x| acc.times(x));
        self.normalize(&raw)
    }

    pub fn inv(&self, a: &Character) -> Character {
        self.normalize(&a.inverse())
    }

    pub fn div(&self, a: &Character, b: &Character) -> Character {
        self.normalize(&a.times(&b.inverse()))
    }

    pub fn pow(&self, a: &Character, k: i64) -> Character {
        self.normalize(&a.pow(k))
    }

    /// `ν^a · x`, normalized.
    pub fn twist(&self, x: &Character, a: Rational64) -> Character {
        self.normalize(&x.twist_nu(a))
    }

    pub fn equals(&self, a: &Character, b: &Character) -> bool {
        self.normalize(a) == self.normalize(b)
    }

    pub fn is_trivial(&self, a: &Character) -> bool {
        self.normalize(a).is_identity()
    }

    pub fn is_unramified(&self, x: &Character) -> bool {
        let n = self.normalize(x);
        n.exps.iter().enumerate().all(|(i, &e)| e == 0 || self.gens[i].is_unramified())
    }

    /// `L(s, x)` when `x` is unramified, the trivial factor otherwise.
    pub fn tate_factor(&self, x: &Character) -> LFactorProduct {
        let n = self.normalize(x);
        if self.is_unramified(&n) {
            LFactorProduct::single(n)
        } else {
            LFactorProduct::one()
        }
    }

    /// Product of `tate_factor(χ·μ)` over a list of characters.
    pub fn tate_product<'a>(&self, chars: impl IntoIterator<Item = &'a Character>, mu: &Character) -> LFactorProduct {
        let mut p = LFactorProduct::one();
        for c in chars {
            p = p.mul(&self.tate_factor(&c.times(mu)));
        }
        p
    }

    /// Whether `x` is one of `set` (up to the relations).
    pub fn contains(&self, set: &[Character], x: &Character) -> bool {
        let x = self.normalize(x);
        set.iter().any(|s| self.normalize(s) == x)
    }

    /// Remove duplicates (up to the relations), keeping first occurrences.
    pub fn dedup(&self, xs: &[Character]) -> Vec<Character> {
        let mut out: Vec<Character> = Vec::new();
        for x in xs {
            let n = self.normalize(x);
            if !out.contains(&n) {
                out.push(n);
            }
        }
        out
    }

    pub fn render(&self, x: &Character) -> String {
        render_with(&self.gens, &self.normalize(x))
    }

    /// Rendering without reduction, for declared relations.
    pub fn render_raw(&self, x: &Character) -> String {
        render_with(&self.gens, x)
    }

    /// `L(s, a) L(s, b)^2 ...`, sorted by the rendered characters; `1` if empty.
    pub fn render_product(&self, p: &LFactorProduct) -> String {
        let mut items: Vec<(String, u32)> = p.support().map(|c| (self.render(c), p.multiplicity(c))).collect();
        if items.is_empty() {
            return "1".to_string();
        }
        items.sort();
        items
            .iter()
            .map(|(c, n)| if *n == 1 { format!("L(s, {c})") } else { format!("L(s, {c})^{n}") })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Sorted canonical renderings, one per factor (with repetition).
    pub fn render_factor_list(&self, p: &LFactorProduct) -> Vec<String> {
        let mut items: Vec<String> = p.iter().map(|c| self.render(c)).collect();
        items.sort();
        items
    }
}

fn render_exponent(e: Rational64) -> Option<String> {
    if e.is_one() {
        None
    } else if e.is_integer() && e.is_positive() {
        Some(format!("^{}", e.numer()))
    } else if e.is_integer() {
        Some(format!("^{{{}}}", e.numer()))
    } else {
        Some(format!("^{{{}/{}}}", e.numer(), e.denom()))
    }
}

pub(crate) fn render_with(gens: &[Generator], x: &Character) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !x.nu.is_zero() {
        let mut s = String::from("nu");
        if let Some(e) = render_exponent(x.nu) {
            s.push_str(&e);
        }
        parts.push(s);
    }
    for (i, &e) in x.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut s = match gens.get(i) {
            Some(g) => g.name.clone(),
            None => format!("g{i}"),
        };
        if let Some(t) = render_exponent(Rational64::from_integer(e)) {
            let _ = write!(s, "{t}");
        }
        parts.push(s);
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Echelon rows `(pivot, exponents, ν)` of the relation lattice.
pub(crate) fn lattice_rows(sys: &CharSystem) -> Vec<(usize, Vec<i64>, Rational64)> {
    sys.lattice.rows().iter().map(|r| (r.pivot, r.exps.clone(), r.nu)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys_with(f: impl FnOnce(&mut CharSystemBuilder)) -> CharSystem {
        let mut b = CharSystem::builder();
        f(&mut b);
        b.build().unwrap()
    }

    #[test]
    fn inverse_cancellation() {
        let s = sys_with(|b| {
            b.unramified("sigma").unwrap();
        });
        let a = s.parse("nu^{1/2}*sigma").unwrap();
        let b = s.parse("nu^{1/2}*sigma^{-1}").unwrap();
        assert_eq!(s.render(&s.mul(&a, &b)), "nu");
    }

    #[test]
    fn order_two() {
        let s = sys_with(|b| {
            b.generator("xi", Ramification::Ramified, Some(2)).unwrap();
            b.unramified("sigma").unwrap();
        });
        let x = s.parse("xi^3*sigma").unwrap();
        assert_eq!(s.render(&x), "xi*sigma");
        assert!(!s.is_unramified(&x));
        assert!(s.is_unramified(&s.parse("xi^2*sigma").unwrap()));
        assert!(s.tate_factor(&x).is_one());
    }

    #[test]
    fn chi_equals_nu() {
        let s = sys_with(|b| {
            let chi = b.unramified("chi1").unwrap();
            b.unramified("sigma").unwrap();
            b.relation(chi, Character::nu_frac(1, 1));
        });
        let a = s.parse("nu*sigma").unwrap();
        let b = s.parse("chi1*sigma").unwrap();
        assert!(s.equals(&a, &b));
    }

    #[test]
    fn mixed_relation_rejected() {
        let mut b = CharSystem::builder();
        let xi = b.generator("xi", Ramification::Ramified, None).unwrap();
        let sigma = b.unramified("sigma").unwrap();
        b.relation(xi, sigma);
        assert!(matches!(b.build(), Err(CharError::MixedRamification(_))));
    }

    #[test]
    fn disequality_contradiction() {
        let mut b = CharSystem::builder();
        let chi = b.unramified("chi").unwrap();
        b.relation(chi.clone(), Character::nu_frac(1, 1));
        b.disequality(chi, Character::nu_frac(1, 1));
        assert!(matches!(b.build(), Err(CharError::InconsistentRelations(_))));
    }

    #[test]
    fn order_forces_nontrivial() {
        let mut b = CharSystem::builder();
        let xi = b.generator("xi", Ramification::Unramified, Some(2)).unwrap();
        b.relation(xi, Character::trivial());
        assert!(matches!(b.build(), Err(CharError::InconsistentRelations(_))));
    }

    #[test]
    fn rendering() {
        let s = sys_with(|b| {
            b.unramified("chi").unwrap();
            b.unramified("sigma").unwrap();
        });
        let cases = [
            ("1", "1"),
            ("nu^2*sigma", "nu^2*sigma"),
            ("nu^{-3/2}*chi^{-1}*sigma^2", "nu^{-3/2}*chi^{-1}*sigma^2"),
            ("sigma*nu", "nu*sigma"),
            ("sigma*chi", "chi*sigma"),
        ];
        for (i, o) in cases {
            assert_eq!(s.render(&s.parse(i).unwrap()), o);
        }
    }

    #[test]
    fn tate_of_trivial() {
        let s = CharSystem::builder().build().unwrap();
        assert_eq!(s.render_product(&s.tate_factor(&Character::trivial())), "L(s, 1)");
    }
}
