//! Minimal parser for character expressions like `nu^{1/2}*chi^{-1}*sigma`.
//!
//! Used for embedded table data and programmatic construction. The session
//! language has its own position-tracking parser.

use num_rational::Rational64;

use super::{CharError, Character};

/// Parse `text`, resolving identifiers with `resolve`. `nu` is always the
/// valuation character and `1` the trivial one. Result is not reduced.
pub fn parse_with(text: &str, resolve: impl Fn(&str) -> Option<Character>) -> Result<Character, CharError> {
    let bad = || CharError::BadExpression(text.to_string());
    let mut acc = Character::trivial();
    for raw in text.split('*') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(bad());
        }
        if term == "1" {
            continue;
        }
        let (name, exp) = match term.split_once('^') {
            Some((n, e)) => (n.trim(), parse_exponent(e.trim()).ok_or_else(bad)?),
            None => (term, Rational64::from_integer(1)),
        };
        if name == "nu" {
            acc = acc.twist_nu(exp);
            continue;
        }
        if !exp.is_integer() {
            return Err(bad());
        }
        let base = resolve(name).ok_or_else(|| CharError::UnknownGenerator(name.to_string()))?;
        acc = acc.times(&base.pow(*exp.numer()));
    }
    Ok(acc)
}

fn parse_exponent(e: &str) -> Option<Rational64> {
    let inner = e.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(e).trim();
    match inner.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational64::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rational64::from_integer(inner.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(n: &str) -> Option<Character> {
        match n {
            "a" => Some(Character::basis(0)),
            "b" => Some(Character::basis(1)),
            _ => None,
        }
    }

    #[test]
    fn parses_products() {
        let c = parse_with("nu^{-3/2}*a^2*b^{-1}*nu", res).unwrap();
        assert_eq!(c.nu_exponent(), Rational64::new(-1, 2));
        assert_eq!(c.exponents(), &[2, -1]);
        assert!(parse_with("1", res).unwrap().is_identity());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_with("a^{1/2}", res).is_err());
        assert!(parse_with("a**b", res).is_err());
        assert!(matches!(parse_with("zeta", res), Err(CharError::UnknownGenerator(_))));
    }
}
