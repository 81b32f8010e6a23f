//! Generic-position instances of every type, one per printed branch.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::chars::{CharError, CharSystem, Character, Ramification};

use super::{CatalogError, ReprSpec, ReprType};

/// A constraint branch as printed in the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    GenericPosition,
    /// `χ² = 1`, `χ ≠ 1` (IIb, IIIb).
    ChiSquaredTrivial,
    /// `χ = ν` (IIIb).
    ChiEqualsNu,
}

pub const BRANCHES: &[Branch] = &[Branch::GenericPosition, Branch::ChiSquaredTrivial, Branch::ChiEqualsNu];

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::GenericPosition => "generic-position",
            Branch::ChiSquaredTrivial => "chi^2=1",
            Branch::ChiEqualsNu => "chi1=nu",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        BRANCHES.iter().copied().find(|b| b.label() == s).ok_or_else(|| format!("unknown branch `{s}`"))
    }
}

/// Generators in rendering order. `xi` and `eta` are the quadratic ones;
/// `tau` and `mu` are free, for generic Bessel characters and twists.
pub fn canonical_system(branch: Branch) -> Result<Arc<CharSystem>, CharError> {
    use Ramification::Unramified;
    let mut b = CharSystem::builder();
    b.unramified("chi1")?;
    b.unramified("chi2")?;
    let chi = b.generator("chi", Unramified, (branch == Branch::ChiSquaredTrivial).then_some(2))?;
    b.generator("xi", Unramified, Some(2))?;
    b.generator("eta", Unramified, Some(2))?;
    b.unramified("omega_pi")?;
    b.unramified("sigma")?;
    b.unramified("tau")?;
    b.unramified("mu")?;
    if branch == Branch::ChiEqualsNu {
        b.relation(chi, Character::nu_frac(1, 1));
    }
    Ok(Arc::new(b.build()?))
}

/// Parameters bound to the like-named generators of `sys`. A cuspidal datum
/// uses `omega_pi`, except for type XI where `ω_π = 1`.
pub fn canonical_params(ty: ReprType, sys: &CharSystem) -> Result<Vec<Character>, CharError> {
    ty.param_names()
        .iter()
        .map(|&n| match n {
            "omega" if matches!(ty, ReprType::XIa | ReprType::XIb) => Ok(Character::trivial()),
            "omega" => sys.gen("omega_pi"),
            other => sys.gen(other),
        })
        .collect()
}

pub fn canonical_spec(ty: ReprType, branch: Branch) -> Result<ReprSpec, CatalogError> {
    let sys = canonical_system(branch)?;
    let params = canonical_params(ty, &sys)?;
    ReprSpec::new(ty, params, sys)
}
