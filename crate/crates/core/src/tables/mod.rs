//! Regeneration of the subregular, total and central-specialization tables,
//! and comparison against the embedded snapshots.

mod snapshots;

use std::fmt;
use std::str::FromStr;

use crate::catalog::{canonical_spec, AdmissibleSet, Branch, CatalogError, ReprSpec, ReprType, RhoColumn};
use crate::chars::{Character, LFactorProduct};
use crate::gk::{listed_mu, zeta_mu_row};
use crate::poles::{admissible_rhos, subregular_factor, total_lfactor};

use snapshots::SNAPSHOTS;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// Subregular factors.
    Sreg,
    /// Total factors with their ρ columns.
    Total,
    /// Central specializations `ζ_μ(Π̄)`.
    Zeta,
}

impl Table {
    pub const ALL: &'static [Table] = &[Table::Sreg, Table::Total, Table::Zeta];

    pub fn name(self) -> &'static str {
        match self {
            Table::Sreg => "sreg",
            Table::Total => "total",
            Table::Zeta => "zeta",
        }
    }

    fn dir(self) -> &'static str {
        match self {
            Table::Sreg => "table1",
            Table::Total => "table4",
            Table::Zeta => "table3",
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Table {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Table::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown table `{s}` (expected sreg, total or zeta)"))
    }
}

/// One regenerated row; `text` has one line per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub id: String,
    pub text: String,
}

pub fn snapshot(id: &str) -> Option<&'static str> {
    SNAPSHOTS.iter().find(|(k, _)| *k == id).map(|(_, v)| *v)
}

fn suffix(branch: Branch) -> &'static str {
    match branch {
        Branch::GenericPosition => "",
        Branch::ChiSquaredTrivial => "-chi_sq_1",
        Branch::ChiEqualsNu => "-chi1_nu",
    }
}

fn lines(xs: impl IntoIterator<Item = String>) -> String {
    xs.into_iter().map(|l| l + "\n").collect()
}

pub fn regenerate(table: Table) -> Result<Vec<TableRow>, CatalogError> {
    let rows = match table {
        Table::Sreg => sreg_rows()?,
        Table::Total => total_rows()?,
        Table::Zeta => zeta_rows()?,
    };
    Ok(rows
        .into_iter()
        .map(|(name, text)| TableRow { id: format!("{}/{name}", table.dir()), text })
        .collect())
}

fn sreg(pi: &ReprSpec, rho: &Character) -> String {
    let l = pi.bessel(rho);
    match subregular_factor(pi, &l, &Character::trivial()) {
        Ok(p) => pi.system().render_product(&p),
        Err(e) => e.to_string(),
    }
}

fn sorted_by_render(pi: &ReprSpec, xs: Vec<Character>) -> Vec<(String, Character)> {
    let sys = pi.system();
    let mut v: Vec<(String, Character)> = sys.dedup(&xs).into_iter().map(|c| (sys.render(&c), c)).collect();
    v.sort();
    v
}

const SPECIAL: &[ReprType] = &[ReprType::IIIb, ReprType::IVc, ReprType::VIc, ReprType::VId];

fn sreg_rows() -> Result<Vec<(String, String)>, CatalogError> {
    let mut out = Vec::new();
    let mut default = Vec::new();
    for &ty in ReprType::ALL {
        let pi = canonical_spec(ty, Branch::GenericPosition)?;
        let sys = pi.system();
        if ty.has_generic_subregular_rule() {
            let dm = sorted_by_render(&pi, pi.delta_minus());
            out.push((format!("{ty}.rho"), lines(dm.iter().map(|(r, d)| format!("rho = {r}: {}", sreg(&pi, d))))));
            let omega = pi.central_character();
            out.push((
                format!("{ty}.rho_star"),
                lines(dm.iter().map(|(r, d)| format!("rho* = {r}: {}", sreg(&pi, &sys.div(&omega, d))))),
            ));
        }
        if SPECIAL.contains(&ty) {
            let AdmissibleSet::Finite(rhos) = pi.admissible_bessel_set() else { unreachable!("{ty} is not generic") };
            let rhos = sorted_by_render(&pi, rhos);
            out.push((ty.to_string(), lines(rhos.iter().map(|(r, rho)| format!("rho = {r}: {}", sreg(&pi, rho))))));
            continue;
        }
        let rhos = match pi.admissible_bessel_set() {
            AdmissibleSet::All => vec![sys.gen("tau")?],
            AdmissibleSet::Finite(xs) => xs,
        };
        for (r, rho) in sorted_by_render(&pi, rhos) {
            default.push(format!("{ty} rho = {r}: {}", sreg(&pi, &rho)));
        }
    }
    out.push(("default".to_string(), lines(default)));
    Ok(out)
}

const BRANCH_ROWS: &[(ReprType, Branch)] =
    &[(ReprType::IIb, Branch::ChiSquaredTrivial), (ReprType::IIIb, Branch::ChiSquaredTrivial), (ReprType::IIIb, Branch::ChiEqualsNu)];

fn specs_with_branches(include: impl Fn(ReprType, Branch) -> bool) -> Result<Vec<(String, ReprSpec)>, CatalogError> {
    let mut out = Vec::new();
    for &ty in ReprType::ALL {
        let mut branches = vec![Branch::GenericPosition];
        branches.extend(BRANCH_ROWS.iter().filter(|(t, _)| *t == ty).map(|(_, b)| *b));
        for b in branches {
            if include(ty, b) {
                out.push((format!("{ty}{}", suffix(b)), canonical_spec(ty, b)?));
            }
        }
    }
    Ok(out)
}

fn total_rows() -> Result<Vec<(String, String)>, CatalogError> {
    let one = Character::trivial();
    let specs = specs_with_branches(|ty, b| !(ty == ReprType::IIIb && b == Branch::ChiSquaredTrivial))?;
    let mut out = Vec::new();
    for (name, pi) in specs {
        let sys = pi.system();
        let rho_line = match pi.table4_rho_column() {
            RhoColumn::All => "all".to_string(),
            RhoColumn::None => "none".to_string(),
            RhoColumn::Listed(xs) => sorted_by_render(&pi, xs).into_iter().map(|x| x.0).collect::<Vec<_>>().join(", "),
        };
        let rhos = admissible_rhos(&pi);
        let l_line = if rhos.is_empty() {
            let l = pi.bessel(&sys.gen("tau")?);
            match total_lfactor(&pi, &l, &one) {
                Err(_) => "NoBesselModel".to_string(),
                Ok(p) => format!("unexpected model: {}", sys.render_product(&p)),
            }
        } else {
            let totals: Vec<LFactorProduct> =
                rhos.iter().filter_map(|r| total_lfactor(&pi, &pi.bessel(r), &one).ok()).collect();
            if totals.len() == rhos.len() && totals.iter().all(|t| *t == totals[0]) {
                sys.render_product(&totals[0])
            } else {
                "depends on rho".to_string()
            }
        };
        out.push((name, lines([format!("rho: {rho_line}"), format!("L: {l_line}")])));
    }
    Ok(out)
}

fn zeta_rows() -> Result<Vec<(String, String)>, CatalogError> {
    let specs = specs_with_branches(|ty, b| !ty.is_generic() && !(ty == ReprType::IIb && b == Branch::ChiSquaredTrivial))?;
    let mut out = Vec::new();
    for (name, pi) in specs {
        let sys = pi.system();
        let mut mus = listed_mu(&pi);
        mus.push(sys.gen("mu")?);
        let text = lines(mus.iter().map(|mu| match zeta_mu_row(&pi, mu) {
            Ok(r) => format!("{}: {}", r.condition, r.expr.render(sys)),
            Err(e) => e.to_string(),
        }));
        out.push((name, text));
    }
    Ok(out)
}

/// Human-readable mismatches between `rows` and the snapshots of `table`,
/// including snapshots with no regenerated row.
pub fn diff(table: Table, rows: &[TableRow]) -> Vec<String> {
    let mut out = Vec::new();
    for r in rows {
        match snapshot(&r.id) {
            None => out.push(format!("{}: no snapshot", r.id)),
            Some(s) if s != r.text => {
                let mut msg = format!("{}: mismatch", r.id);
                for (e, g) in s.lines().zip(r.text.lines()).filter(|(e, g)| e != g) {
                    msg.push_str(&format!("\n  - {e}\n  + {g}"));
                }
                let (ne, ng) = (s.lines().count(), r.text.lines().count());
                if ne != ng {
                    msg.push_str(&format!("\n  {ne} expected lines, {ng} regenerated"));
                }
                out.push(msg);
            }
            Some(_) => {}
        }
    }
    let prefix = format!("{}/", table.dir());
    for (id, _) in SNAPSHOTS.iter().filter(|(id, _)| id.starts_with(&prefix)) {
        if !rows.iter().any(|r| r.id == *id) {
            out.push(format!("{id}: not regenerated"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_match_snapshots() {
        for &t in Table::ALL {
            let rows = regenerate(t).unwrap();
            let d = diff(t, &rows);
            assert!(d.is_empty(), "{}", d.join("\n"));
        }
    }

    #[test]
    fn diff_reports_changes() {
        let mut rows = regenerate(Table::Total).unwrap();
        rows[0].text = "rho: all\nL: 1\n".into();
        rows.pop();
        let d = diff(Table::Total, &rows);
        assert_eq!(d.len(), 2, "{d:?}");
    }
}
