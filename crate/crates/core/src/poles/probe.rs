//! Probe characters for sweeps over ρ and ρ̃.

use std::collections::BTreeSet;

use num_rational::Rational64;

use crate::catalog::{AdmissibleSet, ReprSpec};
use crate::chars::Character;

/// Auxiliary generators swept in addition to those in the parameters.
const AUX: &[&str] = &["eta", "tau"];

/// `ν^a · m` for `a ∈ {−2, −3/2, …, 2}` and `m` a monomial with exponents in
/// `{−1, 0, 1}` over the generators in Π's parameters (and `eta`, `tau` if
/// declared). Deduplicated under the relations and sorted.
pub fn probe_set(pi: &ReprSpec) -> Vec<Character> {
    let sys = pi.system();
    let mut gens: BTreeSet<usize> = BTreeSet::new();
    for p in pi.params() {
        for (i, &e) in p.exponents().iter().enumerate() {
            if e != 0 {
                gens.insert(i);
            }
        }
    }
    for name in AUX {
        if let Some(i) = sys.generators().iter().position(|g| g.name == *name) {
            gens.insert(i);
        }
    }
    let gens: Vec<usize> = gens.into_iter().collect();
    let mut monomials = vec![Character::trivial()];
    for &g in &gens {
        let mut next = Vec::with_capacity(monomials.len() * 3);
        for m in &monomials {
            for e in [-1i64, 0, 1] {
                let mut exps = m.exponents().to_vec();
                exps.resize(g + 1, 0);
                exps[g] = e;
                next.push(Character::from_parts(exps, m.nu_exponent()));
            }
        }
        monomials = next;
    }
    let mut out: BTreeSet<Character> = BTreeSet::new();
    for k in -4..=4 {
        let a = Rational64::new(k, 2);
        for m in &monomials {
            out.insert(sys.twist(m, a));
        }
    }
    out.into_iter().collect()
}

/// ρ values to sweep for split Bessel data: `Δ₊` for non-generic Π; for
/// generic Π the probe set together with `Δ₋` and `ωΔ₋^{-1}`, so that every
/// subregular pole is exercised.
pub fn admissible_rhos(pi: &ReprSpec) -> Vec<Character> {
    match pi.admissible_bessel_set() {
        AdmissibleSet::Finite(xs) => xs,
        AdmissibleSet::All => {
            let sys = pi.system();
            let omega = pi.central_character();
            let mut set: BTreeSet<Character> = probe_set(pi).into_iter().collect();
            for d in pi.delta_minus() {
                set.insert(sys.normalize(&d));
                set.insert(sys.div(&omega, &d));
            }
            set.into_iter().collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{canonical_spec, Branch, ReprType};

    #[test]
    fn probe_sizes() {
        for &ty in ReprType::ALL {
            let p = canonical_spec(ty, Branch::GenericPosition).unwrap();
            assert!(probe_set(&p).len() >= 81, "{ty}");
        }
        let p = canonical_spec(ReprType::IIIb, Branch::ChiEqualsNu).unwrap();
        assert!(probe_set(&p).len() >= 81);
    }
}
