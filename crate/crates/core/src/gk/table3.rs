//! Central specializations `ζ_μ(Π̄)` for non-generic Π.

use crate::catalog::{ReprSpec, ReprType};
use crate::chars::Character;

use super::{Gl2Atom, Gl2Expr, GkError};

/// The selected row: its printed condition and the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaRow {
    pub condition: &'static str,
    pub expr: Gl2Expr,
}

pub fn zeta_mu(pi: &ReprSpec, mu: &Character) -> Result<Gl2Expr, GkError> {
    zeta_mu_row(pi, mu).map(|r| r.expr)
}

/// Rows are tested top to bottom; equalities are decided by the relations
/// of `pi`'s system, anything undecided falls through to the `else` row.
pub fn zeta_mu_row(pi: &ReprSpec, mu: &Character) -> Result<ZetaRow, GkError> {
    use Gl2Atom::*;
    use ReprType::*;
    let sys = pi.system();
    let c = |t: &str| pi.template(t, Some(mu));
    let is = |t: &str| sys.equals(mu, &c(t));
    let ps = |a: &str, b: &str| PrincSeries(c(a), c(b));
    let row = |condition: &'static str, atoms: Vec<Gl2Atom>| Ok(ZetaRow { condition, expr: Gl2Expr::from_atoms(atoms) });
    let chi_sq_trivial = || sys.is_trivial(&c("chi^2"));

    match pi.ty() {
        IIb => row("all mu", vec![ps("nu^{1/2}*chi*sigma", "nu^{-1/2}*chi^{-1}*sigma^{-1}*mu")]),
        IIIb if sys.equals(&c("chi"), &c("nu")) => {
            if is("nu^4*sigma^2") {
                row("mu = nu^4*sigma^2", vec![ps("nu^{1/2}*sigma", "nu^{7/2}*sigma"), MSt1(c("nu^2*sigma"))])
            } else if is("nu^2*sigma^2") {
                row("mu = nu^2*sigma^2", vec![McSt1Self(c("nu*sigma"))])
            } else {
                row(
                    "else",
                    vec![
                        ps("nu^{1/2}*sigma", "nu^{-1/2}*sigma^{-1}*mu"),
                        ps("nu^{3/2}*sigma", "nu^{-3/2}*sigma^{-1}*mu"),
                    ],
                )
            }
        }
        IIIb => {
            if is("nu*chi*sigma^2") {
                row("mu = nu*chi*sigma^2", vec![McPrincSelf(c("nu^{1/2}*chi*sigma"), c("nu^{1/2}*sigma"))])
            } else if is("nu^2*sigma^2") && !chi_sq_trivial() {
                row(
                    "mu = nu^2*sigma^2, chi^2 != 1",
                    vec![MSt1(c("nu*sigma")), ps("nu^{1/2}*chi*sigma", "nu^{3/2}*chi^{-1}*sigma")],
                )
            } else if is("nu^2*chi^2*sigma^2") && !chi_sq_trivial() {
                row(
                    "mu = nu^2*chi^2*sigma^2, chi^2 != 1",
                    vec![MSt1(c("nu*chi*sigma")), ps("nu^{1/2}*sigma", "nu^{3/2}*chi^2*sigma")],
                )
            } else if is("nu^2*sigma^2") {
                row("mu = nu^2*sigma^2, chi^2 = 1", vec![MSt1(c("nu*chi*sigma")), MSt1(c("nu*sigma"))])
            } else {
                row(
                    "else",
                    vec![
                        ps("nu^{1/2}*sigma", "nu^{-1/2}*sigma^{-1}*mu"),
                        ps("nu^{1/2}*chi*sigma", "nu^{-1/2}*chi^{-1}*sigma^{-1}*mu"),
                    ],
                )
            }
        }
        IVb => {
            if is("sigma^2") {
                row("mu = sigma^2", vec![M1St(c("sigma"))])
            } else {
                row("else", vec![ps("nu^{1/2}*sigma", "nu^{-1/2}*sigma^{-1}*mu")])
            }
        }
        IVc => {
            if is("nu^4*sigma^2") {
                row("mu = nu^4*sigma^2", vec![ps("nu^{-1/2}*sigma", "nu^{9/2}*sigma"), MSt1(c("nu^2*sigma"))])
            } else if is("nu*sigma^2") {
                row("mu = nu*sigma^2", vec![McPrincSelf(c("nu^{3/2}*sigma"), c("nu^{-1/2}*sigma"))])
            } else {
                row(
                    "else",
                    vec![
                        ps("nu^{-1/2}*sigma", "nu^{1/2}*sigma^{-1}*mu"),
                        ps("nu^{3/2}*sigma", "nu^{-3/2}*sigma^{-1}*mu"),
                    ],
                )
            }
        }
        IVd => {
            if is("sigma^2") {
                row("mu = sigma^2", vec![OneDim(c("sigma"))])
            } else {
                row("else", vec![])
            }
        }
        Vb => row("all mu", vec![ps("nu^{1/2}*sigma", "nu^{-1/2}*sigma^{-1}*mu")]),
        // Vb with σ replaced by ξσ
        Vc => row("all mu", vec![ps("nu^{1/2}*xi*sigma", "nu^{-1/2}*xi*sigma^{-1}*mu")]),
        Vd => {
            if is("nu^2*xi*sigma^2") {
                row("mu = nu^2*xi*sigma^2", vec![ps("nu*sigma", "nu*xi*sigma")])
            } else {
                row("else", vec![])
            }
        }
        VIb => {
            if is("nu^2*sigma^2") {
                row("mu = nu^2*sigma^2", vec![Steinberg(c("nu*sigma"))])
            } else {
                row("else", vec![])
            }
        }
        VIc | VId => {
            if is("nu^2*sigma^2") {
                row("mu = nu^2*sigma^2", vec![MSt1(c("nu*sigma"))])
            } else {
                row("else", vec![ps("nu^{1/2}*sigma", "nu^{-1/2}*sigma^{-1}*mu")])
            }
        }
        VIIIb => {
            if is("nu^2*omega") {
                row("mu = nu^2*omega_pi", vec![Cuspidal { twist: c("nu"), omega: c("omega") }])
            } else {
                row("else", vec![])
            }
        }
        IXb => {
            if is("nu*omega") {
                row("mu = nu*omega_pi", vec![Cuspidal { twist: c("nu^{1/2}*xi"), omega: c("omega") }])
            } else {
                row("else", vec![])
            }
        }
        XIb => row("all mu", vec![ps("nu^{1/2}*sigma", "nu^{-1/2}*sigma^{-1}*mu")]),
        CuspNonGen => row("all mu", vec![]),
        t => Err(GkError::GenericInput(t.to_string())),
    }
}

/// The μ values of the rows other than `else`, deduplicated.
pub fn listed_mu(pi: &ReprSpec) -> Vec<Character> {
    use ReprType::*;
    let sys = pi.system();
    let ts: &[&str] = match pi.ty() {
        IIIb if sys.equals(&pi.t("chi"), &pi.t("nu")) => &["nu^4*sigma^2", "nu^2*sigma^2"],
        IIIb => &["nu*chi*sigma^2", "nu^2*sigma^2", "nu^2*chi^2*sigma^2"],
        IVb | IVd => &["sigma^2"],
        IVc => &["nu^4*sigma^2", "nu*sigma^2"],
        Vd => &["nu^2*xi*sigma^2"],
        VIb | VIc | VId => &["nu^2*sigma^2"],
        VIIIb => &["nu^2*omega"],
        IXb => &["nu*omega"],
        _ => &[],
    };
    let xs: Vec<Character> = ts.iter().map(|t| pi.t(t)).collect();
    sys.dedup(&xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{canonical_spec, Branch};

    fn z(ty: ReprType, branch: Branch, mu: &str) -> String {
        let p = canonical_spec(ty, branch).unwrap();
        let m = p.system().parse(mu).unwrap();
        zeta_mu(&p, &m).unwrap().render(p.system())
    }

    #[test]
    fn printed_rows() {
        use Branch::*;
        assert_eq!(z(ReprType::IVd, GenericPosition, "sigma^2"), "(sigma o det)");
        assert_eq!(z(ReprType::IVd, GenericPosition, "nu*sigma^2"), "0");
        assert_eq!(z(ReprType::VIb, GenericPosition, "nu^2*sigma^2"), "nu*sigma*St");
        assert_eq!(z(ReprType::IIIb, ChiEqualsNu, "nu^2*sigma^2"), "nu*sigma*M^c_(St:1:St:1)");
    }

    #[test]
    fn generic_input_rejected() {
        let p = canonical_spec(ReprType::I, Branch::GenericPosition).unwrap();
        assert!(matches!(zeta_mu(&p, &Character::trivial()), Err(GkError::GenericInput(_))));
    }
}
