//! Finite products of Tate factors `L(s, χ) = (1 − χ(ϖ) q^{−s})^{−1}`.

use std::collections::BTreeMap;

use super::{CharError, Character};

/// Multiset of normalized unramified characters. Construct through
/// [`super::CharSystem::tate_factor`] so that the invariants hold.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LFactorProduct {
    factors: BTreeMap<Character, u32>,
}

impl LFactorProduct {
    pub fn one() -> Self {
        LFactorProduct::default()
    }

    pub(crate) fn single(c: Character) -> Self {
        let mut factors = BTreeMap::new();
        factors.insert(c, 1);
        LFactorProduct { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn multiplicity(&self, c: &Character) -> u32 {
        self.factors.get(c).copied().unwrap_or(0)
    }

    /// Characters with repetition, in internal order.
    pub fn iter(&self) -> impl Iterator<Item = &Character> + '_ {
        self.factors.iter().flat_map(|(c, &n)| std::iter::repeat_n(c, n as usize))
    }

    /// Distinct characters.
    pub fn support(&self) -> impl Iterator<Item = &Character> + '_ {
        self.factors.keys()
    }

    pub fn mul(&self, other: &LFactorProduct) -> LFactorProduct {
        let mut factors = self.factors.clone();
        for (c, n) in &other.factors {
            *factors.entry(c.clone()).or_insert(0) += n;
        }
        LFactorProduct { factors }
    }

    pub fn divides(&self, other: &LFactorProduct) -> bool {
        self.factors.iter().all(|(c, &n)| other.multiplicity(c) >= n)
    }

    /// `self / q`, failing unless `q` divides `self`.
    pub fn divide_exact(&self, q: &LFactorProduct) -> Result<LFactorProduct, CharError> {
        if !q.divides(self) {
            let missing: u32 = q.factors.iter().map(|(c, &n)| n.saturating_sub(self.multiplicity(c))).sum();
            return Err(CharError::NotDivisible(format!("{missing} factor(s) of the divisor are missing")));
        }
        let mut factors = self.factors.clone();
        for (c, n) in &q.factors {
            let m = factors.get_mut(c).expect("checked by divides");
            *m -= n;
            if *m == 0 {
                factors.remove(c);
            }
        }
        Ok(LFactorProduct { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::super::CharSystem;
    use super::*;

    #[test]
    fn cancellation_and_commutativity() {
        let mut b = CharSystem::builder();
        b.unramified("sigma").unwrap();
        let s = b.build().unwrap();
        let l1 = s.tate_factor(&s.parse("sigma").unwrap());
        let l2 = s.tate_factor(&s.parse("nu*sigma").unwrap());
        let p = l1.mul(&l2);
        assert_eq!(p, l2.mul(&l1));
        assert_eq!(p.divide_exact(&l1).unwrap(), l2);
        assert!(matches!(l1.divide_exact(&l2), Err(CharError::NotDivisible(_))));
        let h = s.tate_factor(&s.parse("nu^{1/2}*sigma").unwrap());
        assert!(h.divides(&h.mul(&h)));
        assert!(!h.mul(&h).divides(&h));
        assert_eq!(s.render_product(&p), "L(s, nu*sigma) L(s, sigma)");
    }
}
