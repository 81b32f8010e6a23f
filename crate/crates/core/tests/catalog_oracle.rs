//! Δ₀ is additive along composition series. For each induced family the
//! Siegel-Jacquet characters of the full induced representation are known in
//! closed form, so the generic member's Δ₀ is pinned down by its non-generic
//! siblings, whose Δ₀ is `ν^{-3/2}·A`.

use std::sync::Arc;

use lspin::catalog::{canonical_params, canonical_system, Branch, ReprSpec, ReprType};
use lspin::chars::{CharSystem, Character};

fn spec(ty: ReprType, sys: &Arc<CharSystem>) -> ReprSpec {
    ReprSpec::new(ty, canonical_params(ty, sys).unwrap(), Arc::clone(sys)).unwrap()
}

fn sorted(sys: &CharSystem, xs: impl IntoIterator<Item = Character>) -> Vec<Character> {
    let mut v: Vec<Character> = xs.into_iter().map(|x| sys.normalize(&x)).collect();
    v.sort();
    v
}

/// `{σ', χ₁σ', χ₂σ', χ₁χ₂σ'}` for `χ₁ × χ₂ ⋊ σ'`.
fn borel(sys: &CharSystem, c1: &str, c2: &str, s: &str) -> Vec<Character> {
    let (c1, c2, s) = (sys.parse(c1).unwrap(), sys.parse(c2).unwrap(), sys.parse(s).unwrap());
    sorted(sys, [s.clone(), sys.mul(&c1, &s), sys.mul(&c2, &s), sys.prod([&c1, &c2, &s])])
}

/// `{σ', ω_π σ'}` for `π ⋊ σ'` induced from the Siegel parabolic.
fn siegel(sys: &CharSystem, omega: &str, s: &str) -> Vec<Character> {
    let (w, s) = (sys.parse(omega).unwrap(), sys.parse(s).unwrap());
    sorted(sys, [s.clone(), sys.mul(&w, &s)])
}

fn family_sum(sys: &Arc<CharSystem>, members: &[ReprType]) -> Vec<Character> {
    sorted(sys, members.iter().flat_map(|&t| spec(t, sys).delta0()))
}

#[test]
fn delta0_is_additive_over_each_family() {
    let sys = canonical_system(Branch::GenericPosition).unwrap();
    use ReprType::*;
    let families: Vec<(&str, Vec<Character>, Vec<ReprType>)> = vec![
        ("I", borel(&sys, "chi1", "chi2", "sigma"), vec![I]),
        ("II", borel(&sys, "nu^{1/2}*chi", "nu^{-1/2}*chi", "sigma"), vec![IIa, IIb]),
        ("III", borel(&sys, "chi", "nu", "nu^{-1/2}*sigma"), vec![IIIa, IIIb]),
        ("IV", borel(&sys, "nu^2", "nu", "nu^{-3/2}*sigma"), vec![IVa, IVb, IVc, IVd]),
        ("V", borel(&sys, "nu*xi", "xi", "nu^{-1/2}*sigma"), vec![Va, Vb, Vc, Vd]),
        ("VI", borel(&sys, "nu", "1", "nu^{-1/2}*sigma"), vec![VIa, VIb, VIc, VId]),
        ("X", siegel(&sys, "omega_pi", "sigma"), vec![X]),
        // ν^{1/2}π ⋊ ν^{-1/2}σ with ω_π = 1
        ("XI", siegel(&sys, "nu", "nu^{-1/2}*sigma"), vec![XIa, XIb]),
    ];
    for (name, whole, members) in families {
        let parts = family_sum(&sys, &members);
        let r = |xs: &[Character]| xs.iter().map(|x| sys.render(x)).collect::<Vec<_>>().join(", ");
        assert_eq!(parts, whole, "family {name}: constituents give [{}], induced gives [{}]", r(&parts), r(&whole));
    }
}

#[test]
fn nongeneric_delta0_is_shifted_a() {
    let sys = canonical_system(Branch::GenericPosition).unwrap();
    for &ty in ReprType::ALL.iter().filter(|t| !t.is_generic()) {
        let p = spec(ty, &sys);
        let a = p.gk_decomposition().a;
        let shifted = sorted(&sys, a.iter().map(|b| b.chi.twist_nu(num_rational::Rational64::new(-3, 2))));
        assert_eq!(sorted(&sys, p.delta0()), shifted, "{ty}");
    }
}

#[test]
fn generic_delta0_sits_inside_the_total_factor() {
    let sys = canonical_system(Branch::GenericPosition).unwrap();
    for &ty in ReprType::ALL.iter().filter(|t| t.is_generic()) {
        let p = spec(ty, &sys);
        let mut total = sorted(&sys, p.table4_characters().unwrap());
        for d in sorted(&sys, p.delta0()) {
            let i = total.iter().position(|t| *t == d).unwrap_or_else(|| panic!("{ty}: {} not in total", sys.render(&d)));
            total.remove(i);
        }
    }
}
