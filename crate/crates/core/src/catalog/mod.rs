//! Irreducible GSp(4) representation types with their character parameters,
//! central characters, Δ-multisets, Gelfand–Kazhdan data and split Bessel
//! admissibility.

mod canonical;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use thiserror::Error;

use crate::chars::{parse_with, CharError, CharSystem, Character};
use crate::gk::Gl2Expr;

pub use canonical::{canonical_params, canonical_spec, canonical_system, Branch, BRANCHES};
pub use tables::RhoColumn;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown representation type `{0}`")]
    UnknownType(String),
    #[error("type {ty} takes {expected} parameter(s) ({names}), got {got}")]
    Arity { ty: ReprType, expected: usize, names: String, got: usize },
    #[error("constraint violated for type {ty}: {message}")]
    ConstraintViolation { ty: ReprType, message: String },
    #[error(transparent)]
    Char(#[from] CharError),
}

macro_rules! repr_types {
    ($($v:ident => $tag:literal, generic: $g:literal, params: [$($p:literal),*];)*) => {
        /// Sally–Tadić classification tag.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ReprType { $($v),* }

        impl ReprType {
            pub const ALL: &'static [ReprType] = &[$(ReprType::$v),*];

            pub fn tag(self) -> &'static str {
                match self { $(ReprType::$v => $tag),* }
            }

            pub fn is_generic(self) -> bool {
                match self { $(ReprType::$v => $g),* }
            }

            /// Parameter names, as used in the embedded table data. A
            /// cuspidal GL(2) datum is represented by its central character
            /// `omega`.
            pub fn param_names(self) -> &'static [&'static str] {
                match self { $(ReprType::$v => &[$($p),*]),* }
            }
        }

        impl FromStr for ReprType {
            type Err = CatalogError;
            fn from_str(s: &str) -> Result<Self, CatalogError> {
                match s {
                    $($tag => Ok(ReprType::$v),)*
                    _ => Err(CatalogError::UnknownType(s.to_string())),
                }
            }
        }
    };
}

repr_types! {
    I => "I", generic: true, params: ["chi1", "chi2", "sigma"];
    IIa => "IIa", generic: true, params: ["chi", "sigma"];
    IIb => "IIb", generic: false, params: ["chi", "sigma"];
    IIIa => "IIIa", generic: true, params: ["chi", "sigma"];
    IIIb => "IIIb", generic: false, params: ["chi", "sigma"];
    IVa => "IVa", generic: true, params: ["sigma"];
    IVb => "IVb", generic: false, params: ["sigma"];
    IVc => "IVc", generic: false, params: ["sigma"];
    IVd => "IVd", generic: false, params: ["sigma"];
    Va => "Va", generic: true, params: ["xi", "sigma"];
    Vb => "Vb", generic: false, params: ["xi", "sigma"];
    Vc => "Vc", generic: false, params: ["xi", "sigma"];
    Vd => "Vd", generic: false, params: ["xi", "sigma"];
    VIa => "VIa", generic: true, params: ["sigma"];
    VIb => "VIb", generic: false, params: ["sigma"];
    VIc => "VIc", generic: false, params: ["sigma"];
    VId => "VId", generic: false, params: ["sigma"];
    VII => "VII", generic: true, params: ["chi", "omega"];
    VIIIa => "VIIIa", generic: true, params: ["omega"];
    VIIIb => "VIIIb", generic: false, params: ["omega"];
    IXa => "IXa", generic: true, params: ["xi", "omega"];
    IXb => "IXb", generic: false, params: ["xi", "omega"];
    X => "X", generic: true, params: ["omega", "sigma"];
    XIa => "XIa", generic: true, params: ["omega", "sigma"];
    XIb => "XIb", generic: false, params: ["omega", "sigma"];
    CuspGen => "CuspGen", generic: true, params: ["omega"];
    CuspNonGen => "CuspNonGen", generic: false, params: ["omega"];
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl ReprType {
    /// Whittaker multiplicity `m_Π`.
    pub fn whittaker_multiplicity(self) -> u8 {
        u8::from(self.is_generic())
    }

    /// Generic types whose subregular factor follows the `τ ∈ Δ₋` rule.
    pub fn has_generic_subregular_rule(self) -> bool {
        use ReprType::*;
        matches!(self, I | IIa | Va | VIa | X | XIa)
    }
}

/// A Gl(1) Jordan block `χ^{(n)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanBlock {
    pub chi: Character,
    pub len: u32,
}

/// `(m_Π, A, B)` from the Gelfand–Kazhdan sequence
/// `0 → j_!i_*(A) → Π̄/𝕊₂^{m_Π} → i_*(B) → 0`. `b` is `None` for generic types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkData {
    pub m_pi: u8,
    pub a: Vec<JordanBlock>,
    pub b: Option<Gl2Expr>,
}

/// Split Bessel datum `Λ = ρ ⊠ ρ*` with `ρ* = ωρ^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BesselDatum {
    pub rho: Character,
    pub rho_star: Character,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdmissibleSet {
    /// Generic Π: every ρ gives a split Bessel model.
    All,
    Finite(Vec<Character>),
}

impl AdmissibleSet {
    pub fn contains(&self, sys: &CharSystem, rho: &Character) -> bool {
        match self {
            AdmissibleSet::All => true,
            AdmissibleSet::Finite(xs) => sys.contains(xs, rho),
        }
    }
}

/// A representation of a given type with concrete character parameters.
#[derive(Clone, Debug)]
pub struct ReprSpec {
    ty: ReprType,
    params: Vec<Character>,
    system: Arc<CharSystem>,
}

impl PartialEq for ReprSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty && self.params == other.params && self.system == other.system
    }
}

impl Eq for ReprSpec {}

impl ReprSpec {
    /// Validates the type's constraints. IIIb with `χ = ν^{-1}` is rewritten
    /// as `χ = ν` with `σ ↦ ν^{-1}σ`.
    pub fn new(ty: ReprType, params: Vec<Character>, system: Arc<CharSystem>) -> Result<ReprSpec, CatalogError> {
        let names = ty.param_names();
        if params.len() != names.len() {
            return Err(CatalogError::Arity { ty, expected: names.len(), names: names.join(", "), got: params.len() });
        }
        for p in &params {
            system.check(p)?;
        }
        let mut params: Vec<Character> = params.iter().map(|p| system.normalize(p)).collect();
        if ty == ReprType::IIIb && system.equals(&params[0], &Character::nu_frac(-1, 1)) {
            params[0] = system.normalize(&Character::nu_frac(1, 1));
            params[1] = system.twist(&params[1], Rational64::from_integer(-1));
        }
        let spec = ReprSpec { ty, params, system };
        spec.check_constraints()?;
        Ok(spec)
    }

    pub fn ty(&self) -> ReprType {
        self.ty
    }

    pub fn params(&self) -> &[Character] {
        &self.params
    }

    pub fn system(&self) -> &CharSystem {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<CharSystem> {
        &self.system
    }

    pub fn param(&self, name: &str) -> Option<&Character> {
        self.ty.param_names().iter().position(|n| *n == name).map(|i| &self.params[i])
    }

    /// Evaluate a character template over the parameters (and `mu`).
    pub(crate) fn template(&self, text: &str, mu: Option<&Character>) -> Character {
        let c = parse_with(text, |n| {
            if n == "mu" {
                return mu.cloned();
            }
            self.param(n).cloned()
        })
        .unwrap_or_else(|e| panic!("bad embedded template `{text}` for {}: {e}", self.ty));
        self.system.normalize(&c)
    }

    pub(crate) fn t(&self, text: &str) -> Character {
        self.template(text, None)
    }

    fn check_constraints(&self) -> Result<(), CatalogError> {
        use ReprType::*;
        let sys = &*self.system;
        let violation = |message: String| CatalogError::ConstraintViolation { ty: self.ty, message };
        let differ = |a: &str, b: &str, hint: &str| -> Result<(), CatalogError> {
            let x = self.t(a);
            let y = self.t(b);
            if sys.equals(&x, &y) {
                Err(violation(format!("requires {a} != {b}{hint}")))
            } else {
                Ok(())
            }
        };
        let equal = |a: &str, b: &str| -> Result<(), CatalogError> {
            if sys.equals(&self.t(a), &self.t(b)) {
                Ok(())
            } else {
                Err(violation(format!("requires {a} = {b}")))
            }
        };
        match self.ty {
            I => {
                let hint = "; the induced representation is reducible there, use one of the types II to VI";
                for (a, b) in [
                    ("chi1", "nu"),
                    ("chi1", "nu^{-1}"),
                    ("chi2", "nu"),
                    ("chi2", "nu^{-1}"),
                    ("chi1*chi2", "nu"),
                    ("chi1*chi2", "nu^{-1}"),
                    ("chi1*chi2^{-1}", "nu"),
                    ("chi1*chi2^{-1}", "nu^{-1}"),
                ] {
                    differ(a, b, hint)?;
                }
            }
            IIa | IIb => {
                for (a, b) in [("chi^2", "nu"), ("chi^2", "nu^{-1}"), ("chi", "nu^{3/2}"), ("chi", "nu^{-3/2}")] {
                    differ(a, b, "; use types IV or V")?;
                }
            }
            IIIa | IIIb => {
                for (a, b) in [("chi", "1"), ("chi", "nu^2"), ("chi", "nu^{-2}")] {
                    differ(a, b, "; use types IV or VI")?;
                }
            }
            Va | Vb | Vc | Vd | IXa | IXb => {
                equal("xi^2", "1")?;
                differ("xi", "1", "")?;
            }
            X => {
                differ("omega", "nu", "; use type XI")?;
                differ("omega", "nu^{-1}", "; use type XI")?;
            }
            XIa | XIb => equal("omega", "1")?,
            _ => {}
        }
        Ok(())
    }

    /// Central character ω.
    pub fn central_character(&self) -> Character {
        use ReprType::*;
        let t = match self.ty {
            I => "chi1*chi2*sigma^2",
            IIa | IIb => "chi^2*sigma^2",
            IIIa | IIIb => "chi*sigma^2",
            IVa | IVb | IVc | IVd | Va | Vb | Vc | Vd | VIa | VIb | VIc | VId | XIa | XIb => "sigma^2",
            VII => "chi*omega",
            VIIIa | VIIIb | CuspGen | CuspNonGen => "omega",
            IXa | IXb => "xi*omega",
            X => "omega*sigma^2",
        };
        self.t(t)
    }

    /// Δ₀(Π) as a multiset.
    pub fn delta0(&self) -> Vec<Character> {
        if self.ty.is_generic() {
            tables::generic_delta0(self)
        } else {
            let shift = Rational64::new(-3, 2);
            tables::table2_a(self).iter().map(|c| self.system.twist(c, shift)).collect()
        }
    }

    /// Δ₊ = ν^{1/2}Δ₀.
    pub fn delta_plus(&self) -> Vec<Character> {
        self.delta0().iter().map(|c| self.system.twist(c, Rational64::new(1, 2))).collect()
    }

    /// Δ₋ = ν^{-1/2}Δ₀.
    pub fn delta_minus(&self) -> Vec<Character> {
        self.delta0().iter().map(|c| self.system.twist(c, Rational64::new(-1, 2))).collect()
    }

    pub fn admissible_bessel_set(&self) -> AdmissibleSet {
        if self.ty.is_generic() {
            AdmissibleSet::All
        } else {
            AdmissibleSet::Finite(self.system.dedup(&self.delta_plus()))
        }
    }

    pub fn bessel(&self, rho: &Character) -> BesselDatum {
        let sys = &*self.system;
        let rho = sys.normalize(rho);
        let rho_star = sys.div(&self.central_character(), &rho);
        let admissible = self.admissible_bessel_set().contains(sys, &rho);
        BesselDatum { rho, rho_star, admissible }
    }

    pub fn gk_decomposition(&self) -> GkData {
        let a_chars = if self.ty.is_generic() {
            let shift = Rational64::new(3, 2);
            self.delta0().iter().map(|c| self.system.twist(c, shift)).collect()
        } else {
            tables::table2_a(self)
        };
        let mut blocks: Vec<JordanBlock> = Vec::new();
        for c in a_chars {
            match blocks.iter_mut().find(|b| b.chi == c) {
                Some(b) => b.len += 1,
                None => blocks.push(JordanBlock { chi: c, len: 1 }),
            }
        }
        let b = (!self.ty.is_generic()).then(|| tables::table2_b(self));
        GkData { m_pi: self.ty.whittaker_multiplicity(), a: blocks, b }
    }

    /// Characters inside the tabulated total factors, before twisting and before
    /// dropping ramified entries. `None` when Π has no split Bessel model.
    pub fn table4_characters(&self) -> Option<Vec<Character>> {
        tables::table4_factors(self)
    }

    pub fn table4_rho_column(&self) -> RhoColumn {
        tables::table4_rho_column(self)
    }

    /// The printed constraint branch this instance belongs to.
    pub fn branch(&self) -> Branch {
        let sys = &*self.system;
        match self.ty {
            ReprType::IIb if sys.is_trivial(&self.t("chi^2")) => Branch::ChiSquaredTrivial,
            ReprType::IIIb if sys.equals(&self.params[0], &Character::nu_frac(1, 1)) => Branch::ChiEqualsNu,
            ReprType::IIIb if sys.is_trivial(&self.t("chi^2")) => Branch::ChiSquaredTrivial,
            _ => Branch::GenericPosition,
        }
    }

    /// True when the declared relations create coincidences among the
    /// characters the tables compare that the printed branch does not have.
    pub fn outside_printed_branches(&self) -> bool {
        let reference = match canonical_spec(self.ty, self.branch()) {
            Ok(r) => r,
            Err(_) => return true,
        };
        let mine = self.coincidences();
        let theirs = reference.coincidences();
        mine.iter().zip(&theirs).any(|(a, b)| *a && !*b)
    }

    fn watch_list(&self) -> Vec<Character> {
        let sys = &*self.system;
        let mut w: Vec<Character> = self.params.clone();
        w.push(self.central_character());
        for d in self.delta0() {
            for k in [-1, 0, 1] {
                w.push(sys.twist(&d, Rational64::from_integer(k)));
            }
        }
        if let Some(t4) = self.table4_characters() {
            w.extend(t4);
        }
        w
    }

    fn coincidences(&self) -> Vec<bool> {
        let sys = &*self.system;
        let w = self.watch_list();
        let mut out = Vec::new();
        for (i, a) in w.iter().enumerate() {
            out.push(sys.is_trivial(a));
            for b in &w[i + 1..] {
                out.push(sys.equals(a, b));
            }
        }
        out
    }

    /// Rendered call, e.g. `IIIb(chi, sigma)`.
    pub fn render(&self) -> String {
        let args: Vec<String> = self.params.iter().map(|p| self.system.render(p)).collect();
        format!("{}({})", self.ty, args.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(ty: ReprType) -> ReprSpec {
        canonical_spec(ty, Branch::GenericPosition).unwrap()
    }

    fn rendered(s: &ReprSpec, xs: &[Character]) -> Vec<String> {
        let mut v: Vec<String> = xs.iter().map(|c| s.system().render(c)).collect();
        v.sort();
        v
    }

    #[test]
    fn central_characters_match_bessel_pairs() {
        let p = spec(ReprType::IIIb);
        let b = p.bessel(&p.t("sigma"));
        assert_eq!(p.system().render(&b.rho_star), "chi*sigma");
        let p = spec(ReprType::IVc);
        let b = p.bessel(&p.t("nu^{-1}*sigma"));
        assert_eq!(p.system().render(&b.rho_star), "nu*sigma");
        assert!(b.admissible);
        let p = spec(ReprType::VIc);
        let b = p.bessel(&p.t("sigma"));
        assert_eq!(b.rho, b.rho_star);
    }

    #[test]
    fn delta_values() {
        let p = spec(ReprType::IIIb);
        assert_eq!(rendered(&p, &p.delta0()), ["nu^{-1/2}*chi*sigma", "nu^{-1/2}*sigma"]);
        assert_eq!(rendered(&p, &p.delta_plus()), ["chi*sigma", "sigma"]);
        let p = spec(ReprType::IVc);
        assert_eq!(rendered(&p, &p.delta_plus()), ["nu*sigma", "nu^{-1}*sigma"]);
        let p = spec(ReprType::VIa);
        assert_eq!(rendered(&p, &p.delta0()), ["nu^{1/2}*sigma", "nu^{1/2}*sigma"]);
        let p = spec(ReprType::I);
        assert_eq!(rendered(&p, &p.delta0()), ["chi1*chi2*sigma", "chi1*sigma", "chi2*sigma", "sigma"]);
    }

    #[test]
    fn admissible_sets() {
        let p = spec(ReprType::IIb);
        assert_eq!(p.admissible_bessel_set(), AdmissibleSet::Finite(vec![p.t("chi*sigma")]));
        assert_eq!(spec(ReprType::Vd).admissible_bessel_set(), AdmissibleSet::Finite(vec![]));
        let p = spec(ReprType::XIb);
        assert_eq!(p.admissible_bessel_set(), AdmissibleSet::Finite(vec![p.t("sigma")]));
        assert_eq!(spec(ReprType::X).admissible_bessel_set(), AdmissibleSet::All);
    }

    #[test]
    fn type_i_reducibility_rejected() {
        let sys = canonical_system(Branch::GenericPosition).unwrap();
        let chi2 = sys.gen("chi2").unwrap();
        let sigma = sys.gen("sigma").unwrap();
        let err = ReprSpec::new(ReprType::I, vec![chi2.twist_nu(Rational64::from_integer(1)), chi2, sigma], sys).unwrap_err();
        assert!(matches!(err, CatalogError::ConstraintViolation { ty: ReprType::I, .. }), "{err}");
    }

    #[test]
    fn iiib_nu_inverse_is_normalized() {
        let sys = canonical_system(Branch::GenericPosition).unwrap();
        let sigma = sys.gen("sigma").unwrap();
        let p = ReprSpec::new(ReprType::IIIb, vec![Character::nu_frac(-1, 1), sigma], sys).unwrap();
        assert_eq!(p.render(), "IIIb(nu, nu^{-1}*sigma)");
        assert_eq!(p.branch(), Branch::ChiEqualsNu);
    }

    #[test]
    fn gk_data() {
        let p = canonical_spec(ReprType::IIb, Branch::ChiSquaredTrivial).unwrap();
        let g = p.gk_decomposition();
        assert_eq!(g.m_pi, 0);
        assert_eq!(g.a, vec![JordanBlock { chi: p.t("nu*chi*sigma"), len: 1 }]);
        let p = spec(ReprType::VIa);
        let g = p.gk_decomposition();
        assert_eq!(g.a, vec![JordanBlock { chi: p.t("nu^2*sigma"), len: 2 }]);
        assert!(g.b.is_none());
    }

    #[test]
    fn outside_printed_branch_detection() {
        let mut b = canonical_system(Branch::GenericPosition).unwrap().extend();
        let (c1, c2) = (b.gen("chi1").unwrap(), b.gen("chi2").unwrap());
        b.relation(c1.clone(), c2.clone());
        let sys = Arc::new(b.build().unwrap());
        let sigma = sys.gen("sigma").unwrap();
        let p = ReprSpec::new(ReprType::I, vec![c1, c2, sigma], sys).unwrap();
        assert!(p.outside_printed_branches());
        assert!(!spec(ReprType::I).outside_printed_branches());
    }
}
