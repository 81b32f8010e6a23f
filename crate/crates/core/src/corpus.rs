//! The embedded verification corpus: every type in generic position plus the
//! special branches and a few ramified and degenerate variants.

use std::sync::Arc;

use crate::catalog::{canonical_params, canonical_system, Branch, CatalogError, ReprSpec, ReprType};
use crate::chars::{CharSystem, Character, Ramification};

/// How the generic-position system is modified for a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    GenericPosition,
    ChiSquaredTrivial,
    ChiEqualsNu,
    ChiEqualsNuInverse,
    XiRamified,
    SigmaRamified,
    Chi1EqualsChi2,
}

impl Variant {
    pub const ALL: &'static [Variant] = &[
        Variant::GenericPosition,
        Variant::ChiSquaredTrivial,
        Variant::ChiEqualsNu,
        Variant::ChiEqualsNuInverse,
        Variant::XiRamified,
        Variant::SigmaRamified,
        Variant::Chi1EqualsChi2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Variant::GenericPosition => "generic-position",
            Variant::ChiSquaredTrivial => "chi^2=1",
            Variant::ChiEqualsNu => "chi1=nu",
            Variant::ChiEqualsNuInverse => "chi1=nu^-1",
            Variant::XiRamified => "xi-ramified",
            Variant::SigmaRamified => "sigma-ramified",
            Variant::Chi1EqualsChi2 => "chi1=chi2",
        }
    }

    pub fn system(self) -> Result<Arc<CharSystem>, CatalogError> {
        let base = |b: Branch| canonical_system(b).map_err(CatalogError::from);
        Ok(match self {
            Variant::GenericPosition => base(Branch::GenericPosition)?,
            Variant::ChiSquaredTrivial => base(Branch::ChiSquaredTrivial)?,
            Variant::ChiEqualsNu => base(Branch::ChiEqualsNu)?,
            Variant::ChiEqualsNuInverse => {
                let mut b = base(Branch::GenericPosition)?.extend();
                let chi = b.gen("chi")?;
                b.relation(chi, Character::nu_frac(-1, 1));
                Arc::new(b.build()?)
            }
            Variant::XiRamified | Variant::SigmaRamified => {
                let mut b = base(Branch::GenericPosition)?.extend();
                let name = if self == Variant::XiRamified { "xi" } else { "sigma" };
                b.set_ramification(name, Ramification::Ramified)?;
                Arc::new(b.build()?)
            }
            Variant::Chi1EqualsChi2 => {
                let mut b = base(Branch::GenericPosition)?.extend();
                let (c1, c2) = (b.gen("chi1")?, b.gen("chi2")?);
                b.relation(c1, c2);
                Arc::new(b.build()?)
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct CorpusCase {
    /// `TYPE:variant`, unique.
    pub id: String,
    pub variant: Variant,
    pub spec: ReprSpec,
    /// Snapshot rows this case is compared against, e.g. `table4/IIIb`.
    pub snapshots: Vec<String>,
}

impl CorpusCase {
    pub fn ty(&self) -> ReprType {
        self.spec.ty()
    }

    /// `--case` filter: `TAG`, `TAG:variant`, an exact case id, or the part
    /// of the id before `:` (the file stem for session cases).
    pub fn matches(&self, filter: &str) -> bool {
        if self.id == filter || self.id.split_once(':').is_some_and(|(head, _)| head == filter) {
            return true;
        }
        match filter.split_once(':') {
            Some((tag, v)) => self.ty().tag() == tag && self.variant.label() == v,
            None => self.ty().tag() == filter,
        }
    }
}

fn variants_for(ty: ReprType) -> Vec<Variant> {
    use ReprType::*;
    use Variant::*;
    let mut v = vec![GenericPosition];
    match ty {
        I => v.extend([SigmaRamified, Chi1EqualsChi2]),
        IIb => v.push(ChiSquaredTrivial),
        IIIb => v.extend([ChiSquaredTrivial, ChiEqualsNu, ChiEqualsNuInverse, SigmaRamified]),
        IVc | VIa | XIb => v.push(SigmaRamified),
        Va | Vb | Vc | Vd | IXa | IXb => v.push(XiRamified),
        _ => {}
    }
    v
}

fn snapshot_refs(ty: ReprType, variant: Variant) -> Vec<String> {
    use ReprType::*;
    let mut out = Vec::new();
    let suffix = match variant {
        Variant::GenericPosition => String::new(),
        Variant::ChiSquaredTrivial if matches!(ty, IIb | IIIb) => "-chi_sq_1".to_string(),
        Variant::ChiEqualsNu if ty == IIIb => "-chi1_nu".to_string(),
        _ => return out,
    };
    if suffix.is_empty() {
        if ty.has_generic_subregular_rule() {
            out.push(format!("table1/{ty}.rho"));
            out.push(format!("table1/{ty}.rho_star"));
        } else if matches!(ty, IIIb | IVc | VIc | VId) {
            out.push(format!("table1/{ty}"));
        }
    }
    if !ty.is_generic() && !(ty == IIb && variant == Variant::ChiSquaredTrivial) {
        out.push(format!("table3/{ty}{suffix}"));
    }
    out.push(format!("table4/{ty}{suffix}"));
    out
}

/// All cases, ordered by type and then variant. Cases sharing a variant
/// share one character system.
pub fn corpus() -> Result<Vec<CorpusCase>, CatalogError> {
    let mut systems = std::collections::BTreeMap::new();
    let mut out = Vec::new();
    for &ty in ReprType::ALL {
        for variant in variants_for(ty) {
            let sys = match systems.get(&variant) {
                Some(s) => Arc::clone(s),
                None => {
                    let s = variant.system()?;
                    systems.insert(variant, Arc::clone(&s));
                    s
                }
            };
            let params = canonical_params(ty, &sys)?;
            let spec = ReprSpec::new(ty, params, sys)?;
            out.push(CorpusCase {
                id: format!("{ty}:{}", variant.label()),
                variant,
                spec,
                snapshots: snapshot_refs(ty, variant),
            });
        }
    }
    Ok(out)
}
