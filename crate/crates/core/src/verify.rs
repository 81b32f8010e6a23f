//! Verification suites over the corpus, run in parallel and merged in a fixed
//! order so that output does not depend on the worker count.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use rayon::prelude::*;

use crate::catalog::{AdmissibleSet, RhoColumn};
use crate::chars::{Character, LFactorProduct, Ramification};
use crate::corpus::{CorpusCase, Variant};
use crate::gk::{
    atom_central_character, constituents, euler_char, gk_expression, listed_mu, one_dim_quotient_dim, zeta_mu,
    zeta_mu_jshriek, zeta_mu_row, Gl2Atom, TestModule,
};
use crate::poles::{
    admissible_rhos, correspondence_check, divisibility_and_independence_check, functionals_with_model, hom_dim,
    numeric_samples, probe_set, subregular_characters, subregular_factor, total_lfactor, VerificationReport, Q_CYCLE, SEED,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Delta,
    Correspondence,
    Divisibility,
    Constituents,
    Hom,
    Euler,
    Symmetry,
    Numeric,
}

impl Check {
    pub const ALL: &'static [Check] = &[
        Check::Delta,
        Check::Correspondence,
        Check::Divisibility,
        Check::Constituents,
        Check::Hom,
        Check::Euler,
        Check::Symmetry,
        Check::Numeric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Delta => "delta",
            Check::Correspondence => "correspondence",
            Check::Divisibility => "divisibility",
            Check::Constituents => "constituents",
            Check::Hom => "hom",
            Check::Euler => "euler",
            Check::Symmetry => "symmetry",
            Check::Numeric => "numeric",
        }
    }

    /// Whether the check runs once over the whole corpus rather than per case.
    pub fn is_global(self) -> bool {
        self == Check::Numeric
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Case id of the corpus-wide numeric check.
pub const GLOBAL_CASE: &str = "table4-corpus";

pub fn run_check(check: Check, case: &CorpusCase) -> VerificationReport {
    let mut rep = match check {
        Check::Delta => delta_check(case),
        Check::Correspondence => correspondence_check(&case.spec, &case.id),
        Check::Divisibility => divisibility_and_independence_check(&case.spec, &case.id),
        Check::Constituents => constituents_check(case),
        Check::Hom => hom_check(case),
        Check::Euler => euler_check(case),
        Check::Symmetry => symmetry_check(case),
        Check::Numeric => numeric_check(std::slice::from_ref(case)),
    };
    if case.spec.outside_printed_branches() {
        rep.note("parameters lie outside the printed branches");
    }
    rep
}

/// Every requested check on every case, plus the global numeric check if
/// requested. Results come back in case order, then check order.
pub fn run(checks: &[Check], cases: &[CorpusCase], jobs: usize) -> Result<Vec<VerificationReport>, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
    let tasks: Vec<(&CorpusCase, Check)> = cases
        .iter()
        .flat_map(|c| checks.iter().filter(|k| !k.is_global()).map(move |&k| (c, k)))
        .collect();
    let mut out: Vec<VerificationReport> = pool.install(|| tasks.par_iter().map(|&(c, k)| run_check(k, c)).collect());
    if checks.contains(&Check::Numeric) {
        out.push(pool.install(|| numeric_check(cases)));
    }
    Ok(out)
}

/// `Δ₊` against the ρ column, and generic `Δ₀` against the total factor.
fn delta_check(case: &CorpusCase) -> VerificationReport {
    let pi = &case.spec;
    let sys = pi.system();
    let mut rep = VerificationReport::new("delta", &case.id);
    let dp = pi.delta_plus();
    let render_set = |xs: &[Character]| {
        let mut v: Vec<String> = xs.iter().map(|x| sys.render(x)).collect();
        v.sort();
        v.join(", ")
    };
    match (pi.table4_rho_column(), pi.admissible_bessel_set()) {
        (RhoColumn::All, AdmissibleSet::All) => {
            rep.expect(pi.ty().is_generic(), || "rho column `all` on a non-generic type".into());
            let d0 = sys.tate_product(&pi.delta0(), &Character::trivial());
            let t4 = sys.tate_product(&pi.table4_characters().unwrap_or_default(), &Character::trivial());
            rep.expect(d0 == t4, || {
                format!("Delta_0 gives {} but the total factor is {}", sys.render_product(&d0), sys.render_product(&t4))
            });
        }
        (RhoColumn::Listed(col), AdmissibleSet::Finite(adm)) => {
            let same = |a: &[Character], b: &[Character]| {
                a.iter().all(|x| sys.contains(b, x)) && b.iter().all(|x| sys.contains(a, x))
            };
            rep.expect(same(&dp, &col), || format!("Delta_+ = {{{}}} but rho column = {{{}}}", render_set(&dp), render_set(&col)));
            rep.expect(same(&adm, &col), || format!("admissible set {{{}}} differs from rho column", render_set(&adm)));
        }
        (RhoColumn::None, AdmissibleSet::Finite(adm)) => {
            rep.expect(adm.is_empty(), || format!("no model expected, admissible = {{{}}}", render_set(&adm)));
            rep.expect(pi.table4_characters().is_none(), || "total factor tabulated without a model".into());
        }
        (col, adm) => rep.expect(false, || format!("rho column {col:?} inconsistent with admissible set {adm:?}")),
    }
    // For non-generic Π, Δ₊ is the admissible set, so it is closed under ρ ↦ ρ*.
    let omega = pi.central_character();
    for d in dp.iter().filter(|_| !pi.ty().is_generic()) {
        let star = sys.div(&omega, d);
        rep.expect(sys.contains(&dp, &star), || {
            format!("{} in Delta_+ but its dual {} is not", sys.render(d), sys.render(&star))
        });
    }
    if !pi.ty().is_generic() {
        let a_zero = pi.gk_decomposition().a.is_empty();
        rep.expect(a_zero == dp.is_empty(), || format!("A = 0 is {a_zero} but Delta_+ = {{{}}}", render_set(&dp)));
    }
    rep
}

/// The μ values exercised for a non-generic case: the listed rows plus a
/// free `mu`.
fn mu_branches(case: &CorpusCase) -> Vec<Character> {
    let mut mus = listed_mu(&case.spec);
    if let Ok(m) = case.spec.system().gen("mu") {
        mus.push(m);
    }
    mus
}

fn constituents_check(case: &CorpusCase) -> VerificationReport {
    let pi = &case.spec;
    let sys = pi.system();
    let mut rep = VerificationReport::new("constituents", &case.id);
    if pi.ty().is_generic() {
        rep.note("generic type: central specializations not tabulated");
        return rep;
    }
    let a = pi.gk_decomposition().a;
    for mu in mu_branches(case) {
        let mu_s = sys.render(&mu);
        let row = match zeta_mu_row(pi, &mu) {
            Ok(r) => r,
            Err(e) => {
                rep.expect(false, || format!("mu = {mu_s}: {e}"));
                continue;
            }
        };
        let zeta = row.expr.clone();
        if !a.is_empty() {
            let js = zeta_mu_jshriek(&a, &mu, sys);
            match (constituents(&zeta, sys), constituents(&js, sys)) {
                (Ok(x), Ok(y)) => rep.expect(x == y, || {
                    format!("mu = {mu_s} [{}]: {} vs j_!i_*(A) {}", row.condition, zeta.render(sys), js.render(sys))
                }),
                (Err(e), _) | (_, Err(e)) => rep.expect(false, || format!("mu = {mu_s}: {e}")),
            }
        } else if row.condition == "else" {
            rep.expect(zeta.is_zero(), || format!("A = 0 but zeta at generic mu is {}", zeta.render(sys)));
        }
        for atom in zeta.atoms() {
            rep.expect(!matches!(atom, Gl2Atom::MncThree(_)), || {
                format!("mu = {mu_s}: {} has no central character", zeta.render(sys))
            });
            if let Some(cc) = atom_central_character(atom, sys) {
                rep.expect(sys.equals(&cc, &mu), || {
                    format!("mu = {mu_s}: atom with central character {}", sys.render(&cc))
                });
            }
        }
    }
    rep
}

fn hom_check(case: &CorpusCase) -> VerificationReport {
    let pi = &case.spec;
    let sys = pi.system();
    let mut rep = VerificationReport::new("hom", &case.id);
    for r in probe_set(pi) {
        let h = hom_dim(pi, &r);
        rep.expect(h <= 1, || format!("hom dim {h} at {}", sys.render(&r)));
        if pi.ty().is_generic() {
            continue;
        }
        let z = zeta_mu(pi, &sys.pow(&r, 2)).and_then(|z| one_dim_quotient_dim(&z, &r, sys));
        match z {
            Ok(q) => rep.expect(q == h, || format!("rho~ = {}: one-dim quotient {q}, hom dim {h}", sys.render(&r))),
            Err(e) => rep.expect(false, || format!("rho~ = {}: {e}", sys.render(&r))),
        }
    }
    for rho in admissible_rhos(pi) {
        let r = sys.twist(&rho, Rational64::from_integer(1));
        let (f, h) = (functionals_with_model(pi, &r), hom_dim(pi, &r));
        rep.expect(f == h, || format!("rho = {}: tabulated {f}, computed {h}", sys.render(&rho)));
    }
    rep
}

fn euler_check(case: &CorpusCase) -> VerificationReport {
    let pi = &case.spec;
    let mut rep = VerificationReport::new("euler", &case.id);
    let x = gk_expression(pi);
    let m_pi = i64::from(pi.ty().whittaker_multiplicity());
    for y in [TestModule::GenericPrincipalSeries, TestModule::OneDimensional] {
        let got = euler_char(&x, y);
        let want = m_pi * i64::from(y.whittaker_multiplicity());
        rep.expect(got == want, || format!("{}: chi = {got}, expected {want}", y.label()));
    }
    rep
}

/// `ρ ↔ ρ*` and twisting by μ.
fn symmetry_check(case: &CorpusCase) -> VerificationReport {
    let pi = &case.spec;
    let sys = pi.system();
    let mut rep = VerificationReport::new("symmetry", &case.id);
    let one = Character::trivial();
    let mut mus: Vec<Character> = ["nu^{1/2}", "mu", "eta", "nu^-1*mu*eta"]
        .iter()
        .filter_map(|t| sys.parse(t).ok())
        .collect();
    for g in sys.generators() {
        if g.ramification == Ramification::Ramified {
            mus.push(sys.gen(&g.name).expect("declared generator"));
        }
    }
    let twist_all = |p: &LFactorProduct, mu: &Character| {
        let xs: Vec<Character> = p.iter().cloned().collect();
        sys.tate_product(&xs, mu)
    };
    for rho in admissible_rhos(pi) {
        let l = pi.bessel(&rho);
        let swapped = pi.bessel(&l.rho_star);
        rep.expect(swapped.admissible, || format!("rho = {} admissible but rho* is not", sys.render(&rho)));
        let (a, b) = match (subregular_characters(pi, &l), subregular_characters(pi, &swapped)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                rep.expect(false, || e.to_string());
                continue;
            }
        };
        let sa = sys.tate_product(&a, &one);
        let sb = sys.tate_product(&b, &one);
        rep.expect(sa == sb, || {
            format!("rho = {}: {} vs swapped {}", sys.render(&rho), sys.render_product(&sa), sys.render_product(&sb))
        });
        for mu in &mus {
            let direct: Vec<Character> = a.iter().map(|c| sys.mul(c, mu)).collect();
            let via = subregular_factor(pi, &l, mu);
            let want = sys.tate_product(&direct, &one);
            rep.expect(via.as_ref() == Ok(&want), || {
                format!("rho = {}, mu = {}: twisted factor mismatch", sys.render(&rho), sys.render(mu))
            });
            if sys.is_unramified(mu) {
                let total1 = total_lfactor(pi, &l, &one);
                let total_mu = total_lfactor(pi, &l, mu);
                if let (Ok(t1), Ok(tm)) = (total1, total_mu) {
                    // Tate factors keep only unramified characters, so an
                    // unramified twist commutes with dropping.
                    let tt = twist_all(&t1, mu);
                    rep.expect(tt == tm, || {
                        format!("rho = {}, mu = {}: total factor not covariant", sys.render(&rho), sys.render(mu))
                    });
                    let s1 = sys.tate_product(&a, &one);
                    rep.expect(twist_all(&s1, mu) == want, || {
                        format!("rho = {}, mu = {}: subregular factor not covariant", sys.render(&rho), sys.render(mu))
                    });
                }
            }
        }
    }
    rep
}

/// Numeric coherence of the total factors of the generic-position cases:
/// equal products agree, distinct ones separate.
pub fn numeric_check(cases: &[CorpusCase]) -> VerificationReport {
    let mut rep = VerificationReport::new("numeric", GLOBAL_CASE);
    let base: Vec<&CorpusCase> = cases.iter().filter(|c| c.variant == Variant::GenericPosition).collect();
    let Some(first) = base.first() else {
        rep.note("no generic-position cases selected");
        return rep;
    };
    let sys_arc = first.spec.system_arc().clone();
    let sys = &*sys_arc;
    let one = Character::trivial();
    // (label, product) for each type with a model, plus identities that must
    // hold numerically.
    let mut totals: Vec<(String, LFactorProduct)> = Vec::new();
    let mut equal_pairs: Vec<(String, LFactorProduct, LFactorProduct)> = Vec::new();
    for c in &base {
        if c.spec.system_arc() != &sys_arc {
            continue;
        }
        let pi = &c.spec;
        let Some(rho) = admissible_rhos(pi).into_iter().next() else { continue };
        let l = pi.bessel(&rho);
        let (Ok(total), Ok(sreg)) = (total_lfactor(pi, &l, &one), subregular_factor(pi, &l, &one)) else {
            rep.expect(false, || format!("{}: no factor at admissible rho", c.id));
            continue;
        };
        match total.divide_exact(&sreg) {
            Ok(rest) => {
                equal_pairs.push((format!("{}: sreg * (total / sreg)", c.id), sreg.mul(&rest), total.clone()));
                equal_pairs.push((format!("{}: commuted", c.id), rest.mul(&sreg), sreg.mul(&rest)));
            }
            Err(e) => rep.expect(false, || format!("{}: {e}", c.id)),
        }
        totals.push((c.id.clone(), total));
    }
    let mut products: Vec<LFactorProduct> = totals.iter().map(|t| t.1.clone()).collect();
    for (_, a, b) in &equal_pairs {
        products.push(a.clone());
        products.push(b.clone());
    }
    let samples = match numeric_samples(sys, SEED, &Q_CYCLE, &products) {
        Ok(s) => s,
        Err(e) => {
            rep.expect(false, || format!("numeric evaluation failed: {e}"));
            return rep;
        }
    };
    let n = totals.len();
    for (k, vals) in samples.iter().enumerate() {
        for (j, (label, _, _)) in equal_pairs.iter().enumerate() {
            let d = (vals[n + 2 * j] - vals[n + 2 * j + 1]).norm();
            rep.expect(d <= 1e-9, || format!("sample {k}, {label}: deviation {d:e}"));
        }
        for i in 0..n {
            for j in i + 1..n {
                let d = (vals[i] - vals[j]).norm();
                if totals[i].1 == totals[j].1 {
                    rep.expect(d <= 1e-9, || format!("sample {k}: {} and {} equal but differ by {d:e}", totals[i].0, totals[j].0));
                } else {
                    rep.expect(d > 1e-6, || {
                        format!("sample {k}: {} and {} distinct but within {d:e}", totals[i].0, totals[j].0)
                    });
                }
            }
        }
    }
    rep
}
