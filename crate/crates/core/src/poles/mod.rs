//! Subregular factors, `(H₊, ρ̃)`-functional dimensions and total L-factors,
//! plus the checks that tie them together.

mod checks;
mod probe;
mod report;

use num_rational::Rational64;
use thiserror::Error;

use crate::catalog::{BesselDatum, ReprSpec, ReprType};
use crate::chars::{Character, LFactorProduct};

pub use checks::{correspondence_check, divisibility_and_independence_check, NUMERIC_SAMPLES};
pub(crate) use checks::{numeric_samples, Q_CYCLE, SEED};
pub use probe::{admissible_rhos, probe_set};
pub use report::VerificationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PoleError {
    #[error("{ty} has no split Bessel model for rho = {rho}")]
    NoBesselModel { ty: ReprType, rho: String },
}

fn require_model(pi: &ReprSpec, lambda: &BesselDatum) -> Result<(), PoleError> {
    if lambda.admissible {
        Ok(())
    } else {
        Err(PoleError::NoBesselModel { ty: pi.ty(), rho: pi.system().render(&lambda.rho) })
    }
}

/// Characters `χ` with `L(s, χ)` in the subregular factor at `μ = 1`, before
/// ramified entries are dropped.
pub fn subregular_characters(pi: &ReprSpec, lambda: &BesselDatum) -> Result<Vec<Character>, PoleError> {
    use ReprType::*;
    require_model(pi, lambda)?;
    let sys = pi.system();
    let half = Rational64::new(1, 2);
    let rho_in = |ts: &[&str]| {
        let set: Vec<Character> = ts.iter().map(|t| pi.t(t)).collect();
        sys.contains(&set, &lambda.rho)
    };
    let out = match pi.ty() {
        t if t.has_generic_subregular_rule() => {
            let dm = pi.delta_minus();
            sys.dedup(&[lambda.rho.clone(), lambda.rho_star.clone()])
                .into_iter()
                .filter(|tau| sys.contains(&dm, tau))
                .map(|tau| sys.twist(&tau, half))
                .collect()
        }
        IIIb if rho_in(&["sigma", "chi*sigma"]) => vec![pi.t("nu^{1/2}*chi*sigma"), pi.t("nu^{1/2}*sigma")],
        IVc if rho_in(&["nu*sigma", "nu^{-1}*sigma"]) => vec![pi.t("nu^{3/2}*sigma")],
        VIc | VId if rho_in(&["sigma"]) => vec![pi.t("nu^{1/2}*sigma")],
        _ => vec![],
    };
    Ok(out)
}

/// `L_sreg(s, Π, μ, Λ)`.
pub fn subregular_factor(pi: &ReprSpec, lambda: &BesselDatum, mu: &Character) -> Result<LFactorProduct, PoleError> {
    let chars = subregular_characters(pi, lambda)?;
    Ok(pi.system().tate_product(&chars, mu))
}

/// `dim Hom_{Gl(2)}(Π̄, ρ̃∘det)`.
pub fn hom_dim(pi: &ReprSpec, rho_tilde: &Character) -> u32 {
    use ReprType::*;
    let sys = pi.system();
    let dp = pi.delta_plus();
    let in_dp = sys.contains(&dp, rho_tilde);
    let in_ndp = || {
        let ndp: Vec<Character> = dp.iter().map(|c| sys.twist(c, Rational64::from_integer(1))).collect();
        sys.contains(&ndp, rho_tilde)
    };
    let is = |t: &str| sys.equals(rho_tilde, &pi.t(t));
    let hit = match pi.ty() {
        t if t.has_generic_subregular_rule() => in_dp,
        IIb | Vb | Vc | XIb => in_dp,
        IVc => in_dp || is("nu^2*sigma"),
        IIIb | VIc | VId => in_dp || in_ndp(),
        IVd => is("sigma"),
        _ => false,
    };
    u32::from(hit)
}

/// The restriction of [`hom_dim`] to `ρ̃ = νρ` with `ρ` admissible, as
/// tabulated case by case for representations with a split Bessel model.
pub fn functionals_with_model(pi: &ReprSpec, rho_tilde: &Character) -> u32 {
    use ReprType::*;
    let sys = pi.system();
    let dp = pi.delta_plus();
    let ndp: Vec<Character> = dp.iter().map(|c| sys.twist(c, Rational64::from_integer(1))).collect();
    let hit = match pi.ty() {
        t if t.has_generic_subregular_rule() => sys.contains(&dp, rho_tilde),
        IIIb | VIc | VId => sys.contains(&ndp, rho_tilde),
        IVc => sys.equals(rho_tilde, &pi.t("nu^2*sigma")),
        _ => false,
    };
    u32::from(hit)
}

/// `L^PS(s, Π, μ, Λ)`; depends on Λ only through admissibility.
pub fn total_lfactor(pi: &ReprSpec, lambda: &BesselDatum, mu: &Character) -> Result<LFactorProduct, PoleError> {
    require_model(pi, lambda)?;
    let chars = pi.table4_characters().ok_or_else(|| PoleError::NoBesselModel {
        ty: pi.ty(),
        rho: pi.system().render(&lambda.rho),
    })?;
    Ok(pi.system().tate_product(&chars, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{canonical_spec, Branch};

    fn spec(ty: ReprType) -> ReprSpec {
        canonical_spec(ty, Branch::GenericPosition).unwrap()
    }

    fn sreg(p: &ReprSpec, rho: &str) -> String {
        let l = p.bessel(&p.system().parse(rho).unwrap());
        p.system().render_product(&subregular_factor(p, &l, &Character::trivial()).unwrap())
    }

    fn total(p: &ReprSpec, rho: &str) -> Result<String, PoleError> {
        let l = p.bessel(&p.system().parse(rho).unwrap());
        total_lfactor(p, &l, &Character::trivial()).map(|x| p.system().render_product(&x))
    }

    #[test]
    fn subregular_rows() {
        assert_eq!(sreg(&spec(ReprType::IIIb), "sigma"), "L(s, nu^{1/2}*chi*sigma) L(s, nu^{1/2}*sigma)");
        assert_eq!(sreg(&spec(ReprType::VIa), "sigma"), "L(s, nu^{1/2}*sigma)");
        assert_eq!(sreg(&spec(ReprType::I), "tau"), "1");
        assert_eq!(sreg(&spec(ReprType::IVc), "nu*sigma"), "L(s, nu^{3/2}*sigma)");
        assert_eq!(sreg(&spec(ReprType::I), "nu^{-1/2}*chi1*sigma"), "L(s, chi1*sigma)");
    }

    #[test]
    fn hom_dims() {
        let p = spec(ReprType::IVd);
        assert_eq!(hom_dim(&p, &p.t("sigma")), 1);
        let p = spec(ReprType::IVc);
        assert_eq!(hom_dim(&p, &p.t("sigma")), 0);
        assert_eq!(hom_dim(&p, &p.t("nu^2*sigma")), 1);
        let p = spec(ReprType::VIb);
        for r in probe_set(&p) {
            assert_eq!(hom_dim(&p, &r), 0);
        }
        let p = spec(ReprType::I);
        assert_eq!(hom_dim(&p, &p.t("nu^{1/2}*chi2*sigma")), 1);
        assert_eq!(hom_dim(&p, &p.t("chi2*sigma")), 0);
    }

    #[test]
    fn totals() {
        assert_eq!(total(&spec(ReprType::IVa), "tau").unwrap(), "L(s, nu^{3/2}*sigma)");
        assert_eq!(
            total(&spec(ReprType::I), "tau").unwrap(),
            "L(s, chi1*chi2*sigma) L(s, chi1*sigma) L(s, chi2*sigma) L(s, sigma)"
        );
        assert_eq!(
            total(&spec(ReprType::VId), "sigma").unwrap(),
            "L(s, nu^{-1/2}*sigma)^2 L(s, nu^{1/2}*sigma)^2"
        );
        assert_eq!(total(&spec(ReprType::CuspGen), "tau").unwrap(), "1");
        assert!(matches!(total(&spec(ReprType::Vd), "sigma"), Err(PoleError::NoBesselModel { .. })));
        assert!(total(&spec(ReprType::IIb), "sigma").is_err());
    }
}
