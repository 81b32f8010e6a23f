//! Embedded table data, written over the parameter names of each type.

use crate::chars::Character;
use crate::gk::{Gl2Atom, Gl2Expr};

use super::{ReprSpec, ReprType};

/// The ρ column of the total L-factor table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoColumn {
    All,
    Listed(Vec<Character>),
    None,
}

fn chars(p: &ReprSpec, ts: &[&str]) -> Vec<Character> {
    ts.iter().map(|t| p.t(t)).collect()
}

/// Δ₀ for generic types. Derived data: the Siegel-Jacquet module of the
/// full induced representation minus the non-generic constituents.
pub(super) fn generic_delta0(p: &ReprSpec) -> Vec<Character> {
    use ReprType::*;
    let ts: &[&str] = match p.ty() {
        I => &["sigma", "chi1*sigma", "chi2*sigma", "chi1*chi2*sigma"],
        IIa => &["sigma", "nu^{1/2}*chi*sigma", "chi^2*sigma"],
        IIIa => &["nu^{1/2}*sigma", "nu^{1/2}*chi*sigma"],
        IVa => &["nu^{3/2}*sigma"],
        Va => &["nu^{1/2}*sigma", "nu^{1/2}*xi*sigma"],
        VIa => &["nu^{1/2}*sigma", "nu^{1/2}*sigma"],
        X => &["sigma", "omega*sigma"],
        XIa => &["nu^{1/2}*sigma"],
        VII | VIIIa | IXa | CuspGen => &[],
        t => unreachable!("{t} is not generic"),
    };
    chars(p, ts)
}

/// Constituents of the Gl(1)-module A for non-generic types.
pub(super) fn table2_a(p: &ReprSpec) -> Vec<Character> {
    use ReprType::*;
    let ts: &[&str] = match p.ty() {
        IIb => &["nu*chi*sigma"],
        IIIb => &["nu*sigma", "nu*chi*sigma"],
        IVb => &["nu*sigma"],
        IVc => &["sigma", "nu^2*sigma"],
        Vb => &["nu*sigma"],
        Vc => &["nu*xi*sigma"],
        VIc | VId | XIb => &["nu*sigma"],
        IVd | Vd | VIb | VIIIb | IXb | CuspNonGen => &[],
        t => unreachable!("{t} is generic"),
    };
    chars(p, ts)
}

/// The Gl(2)-module B for non-generic types.
pub(super) fn table2_b(p: &ReprSpec) -> Gl2Expr {
    use Gl2Atom::*;
    use ReprType::*;
    let sys = p.system();
    let c = |t: &str| p.t(t);
    let ps = |a: &str, b: &str| PrincSeries(c(a), c(b));
    let atoms = match p.ty() {
        IIb if sys.is_trivial(&c("chi^2")) => vec![JordanPrinc(c("nu^{1/2}*chi*sigma"), c("nu*sigma"), 2)],
        IIb => vec![ps("nu^{1/2}*chi*sigma", "nu*chi^2*sigma"), ps("nu^{1/2}*chi*sigma", "nu*sigma")],
        IIIb if sys.equals(&c("chi"), &c("nu")) => vec![OneDim(c("nu^2*sigma")), MncThree(c("nu*sigma"))],
        IIIb => vec![OneDim(c("nu*chi*sigma")), OneDim(c("nu*sigma")), ps("nu^{1/2}*chi*sigma", "nu^{1/2}*sigma")],
        IVb => vec![Steinberg(c("sigma")), ps("nu^{5/2}*sigma", "nu^{1/2}*sigma")],
        IVc => vec![OneDim(c("nu^2*sigma")), ps("nu^{3/2}*sigma", "nu^{-1/2}*sigma")],
        IVd => vec![OneDim(c("sigma"))],
        Vb => vec![ps("nu^{3/2}*xi*sigma", "nu^{1/2}*sigma")],
        // Vb with σ replaced by ξσ
        Vc => vec![ps("nu^{3/2}*sigma", "nu^{1/2}*xi*sigma")],
        Vd => vec![ps("nu*xi*sigma", "nu*sigma")],
        VIb => vec![Steinberg(c("nu*sigma"))],
        VIc => vec![OneDim(c("nu*sigma"))],
        VId => vec![OneDim(c("nu*sigma")), ps("nu^{1/2}*sigma", "nu^{1/2}*sigma")],
        VIIIb => vec![Cuspidal { twist: c("nu"), omega: c("omega") }],
        IXb => vec![Cuspidal { twist: c("nu^{1/2}*xi"), omega: c("omega") }],
        XIb | CuspNonGen => vec![],
        t => unreachable!("{t} is generic"),
    };
    Gl2Expr::from_atoms(atoms)
}

/// Characters `χ` of the factors `L(s, χ)` of the total L-factor.
pub(super) fn table4_factors(p: &ReprSpec) -> Option<Vec<Character>> {
    use ReprType::*;
    let ts: &[&str] = match p.ty() {
        I => &["sigma", "chi1*sigma", "chi2*sigma", "chi1*chi2*sigma"],
        IIa => &["sigma", "chi^2*sigma", "nu^{1/2}*chi*sigma"],
        IIb => &["sigma", "chi^2*sigma", "nu^{-1/2}*chi*sigma", "nu^{1/2}*chi*sigma"],
        IIIa => &["nu^{1/2}*chi*sigma", "nu^{1/2}*sigma"],
        IIIb => &["nu^{-1/2}*chi*sigma", "nu^{-1/2}*sigma", "nu^{1/2}*chi*sigma", "nu^{1/2}*sigma"],
        IVa => &["nu^{3/2}*sigma"],
        IVb => &["nu^{3/2}*sigma", "nu^{-1/2}*sigma"],
        IVc => &["nu^{1/2}*sigma", "nu^{-3/2}*sigma", "nu^{3/2}*sigma"],
        Va => &["nu^{1/2}*sigma", "nu^{1/2}*xi*sigma"],
        Vb => &["nu^{-1/2}*sigma", "nu^{1/2}*xi*sigma", "nu^{1/2}*sigma"],
        Vc => &["nu^{1/2}*sigma", "nu^{-1/2}*xi*sigma", "nu^{1/2}*xi*sigma"],
        VIa => &["nu^{1/2}*sigma", "nu^{1/2}*sigma"],
        VIc => &["nu^{-1/2}*sigma", "nu^{1/2}*sigma", "nu^{1/2}*sigma"],
        VId => &["nu^{-1/2}*sigma", "nu^{-1/2}*sigma", "nu^{1/2}*sigma", "nu^{1/2}*sigma"],
        VII | VIIIa | IXa | CuspGen => &[],
        X => &["sigma", "omega*sigma"],
        XIa => &["nu^{1/2}*sigma"],
        XIb => &["nu^{-1/2}*sigma", "nu^{1/2}*sigma"],
        IVd | Vd | VIb | VIIIb | IXb | CuspNonGen => return None,
    };
    Some(chars(p, ts))
}

pub(super) fn table4_rho_column(p: &ReprSpec) -> RhoColumn {
    use ReprType::*;
    if p.ty().is_generic() {
        return RhoColumn::All;
    }
    let ts: &[&str] = match p.ty() {
        IIb => &["chi*sigma"],
        IIIb => &["sigma", "chi*sigma"],
        IVb | Vb | VIc | VId | XIb => &["sigma"],
        IVc => &["nu*sigma", "nu^{-1}*sigma"],
        Vc => &["xi*sigma"],
        _ => return RhoColumn::None,
    };
    RhoColumn::Listed(chars(p, ts))
}
