//! Query evaluation and report emission.

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{AdmissibleSet, ReprSpec};
use crate::chars::{Character, LFactorProduct};
use crate::corpus::{CorpusCase, Variant};
use crate::gk::{euler_char, gk_expression, zeta_mu, TestModule};
use crate::poles::{admissible_rhos, hom_dim, numeric_samples, subregular_factor, total_lfactor, PoleError};
use crate::verify::{run_check, Check};

use super::{CharAst, DslError, ErrorKind, Query, Session};

/// `--numeric q=Q seed=S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericOptions {
    pub q: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct QueryResult {
    pub verb: String,
    pub input: String,
    pub result: Value,
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Text-mode rendering of `result`.
    #[serde(skip)]
    pub text: String,
    /// A verification (symbolic or numeric) failed.
    #[serde(skip)]
    pub failed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub queries: Vec<QueryResult>,
}

impl Report {
    /// No query errored and nothing failed.
    pub fn ok(&self) -> bool {
        self.queries.iter().all(|q| q.error.is_none() && !q.failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for q in &self.queries {
            match &q.error {
                Some(e) => out.push_str(&format!("{}: error: {e}\n", q.input)),
                None => out.push_str(&format!("{} {}\n", q.input, q.text)),
            }
        }
        out
    }
}

fn provenance(verb: &str) -> &'static str {
    match verb {
        "lfactor" => "Table 4",
        "sreg" => "Table 1",
        "zeta" => "Table 3",
        _ => "rule",
    }
}

pub fn evaluate(session: &Session, numeric: Option<NumericOptions>) -> Report {
    let queries = session
        .queries
        .iter()
        .map(|q| {
            let mut r = QueryResult {
                verb: q.verb.clone(),
                input: q.render(),
                result: Value::Null,
                provenance: provenance(&q.verb),
                numeric: None,
                error: None,
                text: String::new(),
                failed: false,
            };
            if let Err(e) = eval_query(session, q, numeric, &mut r) {
                r.error = Some(e.to_string());
            }
            r
        })
        .collect();
    Report { schema: 1, queries }
}

fn eval_error(q: &Query, kind: ErrorKind, msg: impl Into<String>) -> DslError {
    DslError::new(kind, q.pos, &q.verb, msg)
}

fn arity(q: &Query, min: usize, max: usize, usage: &str) -> Result<(), DslError> {
    if q.args.len() < min || q.args.len() > max {
        return Err(eval_error(q, ErrorKind::Syntax, format!("usage: {usage}")));
    }
    Ok(())
}

fn repr<'a>(s: &'a Session, ast: &CharAst) -> Result<&'a ReprSpec, DslError> {
    let name = ast.as_name().unwrap_or("");
    s.repr(name).ok_or_else(|| {
        DslError::new(ErrorKind::UnknownName, ast.pos, &ast.render(), "expected a representation name")
    })
}

fn factor_list(pi: &ReprSpec, p: &LFactorProduct) -> (Value, String) {
    let sys = pi.system();
    (json!(sys.render_factor_list(p)), format!("= {}", sys.render_product(p)))
}

fn pole_error(q: &Query, e: PoleError) -> DslError {
    eval_error(q, ErrorKind::NoBesselModel, e.to_string())
}

fn eval_query(s: &Session, q: &Query, numeric: Option<NumericOptions>, r: &mut QueryResult) -> Result<(), DslError> {
    let one = Character::trivial();
    match q.verb.as_str() {
        "lfactor" | "sreg" => {
            let usage = format!("{}(repr, rho[, mu])", q.verb);
            arity(q, 2, 3, &usage)?;
            let pi = repr(s, &q.args[0])?;
            if let AdmissibleSet::Finite(xs) = pi.admissible_bessel_set() {
                if xs.is_empty() {
                    return Err(eval_error(q, ErrorKind::NoBesselModel, format!("{} has no split Bessel model", pi.ty())));
                }
            }
            let rho = s.eval_char(&q.args[1])?;
            let mu = match q.args.get(2) {
                Some(a) => s.eval_char(a)?,
                None => one.clone(),
            };
            let lambda = pi.bessel(&rho);
            let p = if q.verb == "lfactor" {
                total_lfactor(pi, &lambda, &mu)
            } else {
                subregular_factor(pi, &lambda, &mu)
            }
            .map_err(|e| pole_error(q, e))?;
            (r.result, r.text) = factor_list(pi, &p);
            if let Some(opts) = numeric {
                let (v, ok) = numeric_cross_check(pi, &rho, &mu, opts);
                r.failed |= !ok;
                r.text.push_str(&format!("\n    numeric q={} seed={}: {}", opts.q, opts.seed, if ok { "ok" } else { "FAILED" }));
                r.numeric = Some(v);
            }
        }
        "homdim" => {
            arity(q, 2, 2, "homdim(repr, rho~)")?;
            let pi = repr(s, &q.args[0])?;
            let x = s.eval_char(&q.args[1])?;
            let h = hom_dim(pi, &x);
            r.result = json!(h);
            r.text = format!("= {h}");
        }
        "delta" => {
            arity(q, 1, 1, "delta(repr)")?;
            let pi = repr(s, &q.args[0])?;
            let sys = pi.system();
            let mut xs: Vec<String> = pi.delta_plus().iter().map(|c| sys.render(c)).collect();
            xs.sort();
            r.text = format!("= {{{}}}", xs.join(", "));
            r.result = json!(xs);
        }
        "zeta" => {
            arity(q, 2, 2, "zeta(repr, mu)")?;
            let pi = repr(s, &q.args[0])?;
            let mu = s.eval_char(&q.args[1])?;
            let z = zeta_mu(pi, &mu).map_err(|e| eval_error(q, ErrorKind::Evaluation, e.to_string()))?;
            let text = z.render(pi.system());
            r.text = format!("= {text}");
            r.result = json!(text);
        }
        "euler" => {
            arity(q, 1, 1, "euler(repr)")?;
            let pi = repr(s, &q.args[0])?;
            let x = gk_expression(pi);
            let g = euler_char(&x, TestModule::GenericPrincipalSeries);
            let o = euler_char(&x, TestModule::OneDimensional);
            let m = pi.ty().whittaker_multiplicity();
            r.failed = g != i64::from(m) || o != 0;
            r.text = format!("= {g} (generic principal series), {o} (one-dimensional)");
            r.result = json!({ "m_pi": m, "generic_principal_series": g, "one_dimensional": o });
        }
        "verify" => {
            arity(q, 2, 2, "verify(check, repr)")?;
            let name = q.args[0].as_name().unwrap_or("");
            let check: Check = name
                .parse()
                .map_err(|e: String| DslError::new(ErrorKind::UnknownName, q.args[0].pos, name, e))?;
            let pi = repr(s, &q.args[1])?;
            let case = CorpusCase {
                id: q.args[1].render(),
                variant: Variant::GenericPosition,
                spec: pi.clone(),
                snapshots: vec![],
            };
            let rep = run_check(check, &case);
            r.failed = !rep.passed();
            r.text = format!(
                "= {} ({} checks){}",
                if rep.passed() { "PASS" } else { "FAIL" },
                rep.checks,
                rep.failures.iter().map(|f| format!("\n    failure: {f}")).collect::<String>()
            );
            r.result = json!({ "failures": rep.failures });
        }
        other => return Err(eval_error(q, ErrorKind::Syntax, format!("unknown verb `{other}`"))),
    }
    Ok(())
}

/// The total factor at `rho` against the totals at other admissible ρ, and
/// `sreg · (total / sreg)` against the total, at seeded sample points.
fn numeric_cross_check(pi: &ReprSpec, rho: &Character, mu: &Character, opts: NumericOptions) -> (Value, bool) {
    let lambda = pi.bessel(rho);
    let (Ok(total), Ok(sreg)) = (total_lfactor(pi, &lambda, mu), subregular_factor(pi, &lambda, mu)) else {
        return (json!({ "error": "no factor" }), false);
    };
    let mut products = vec![total.clone()];
    if let Ok(rest) = total.divide_exact(&sreg) {
        products.push(sreg.mul(&rest));
    } else {
        return (json!({ "error": "subregular factor does not divide the total" }), false);
    }
    for other in admissible_rhos(pi).iter().take(16) {
        if let Ok(t) = total_lfactor(pi, &pi.bessel(other), mu) {
            products.push(t);
        }
    }
    match numeric_samples(pi.system(), opts.seed, &[opts.q], &products) {
        Ok(samples) => {
            let dev = samples
                .iter()
                .flat_map(|v| v.iter().map(move |x| (x - v[0]).norm()))
                .fold(0.0, f64::max);
            let ok = dev <= 1e-9;
            (
                json!({ "q": opts.q, "seed": opts.seed, "samples": samples.len(), "comparisons": products.len() - 1, "agree": ok }),
                ok,
            )
        }
        Err(e) => (json!({ "error": e.to_string() }), false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_session;

    fn run(text: &str) -> Report {
        evaluate(&parse_session(text).unwrap(), None)
    }

    #[test]
    fn iva_lfactor() {
        let r = run("chars { sigma: unramified; } repr P = IVa(sigma); bessel r = sigma; compute lfactor(P, r);");
        assert!(r.ok());
        assert_eq!(r.queries[0].result, json!(["nu^{3/2}*sigma"]));
        assert_eq!(r.queries[0].provenance, "Table 4");
        assert!(r.to_json().contains("\"schema\": 1"));
    }

    #[test]
    fn vd_has_no_model_even_with_undeclared_rho() {
        let r = run("repr P = Vd(xi, sigma); compute lfactor(P, r);");
        assert!(!r.ok());
        assert!(r.queries[0].error.as_deref().unwrap().contains("NoBesselModel"));
    }

    #[test]
    fn homdim_verify_and_empty() {
        let r = run("repr P = IVd(sigma); compute homdim(P, sigma);");
        assert_eq!(r.queries[0].result, json!(1));
        let r = run("repr P = IIIb(chi, sigma); compute verify(correspondence, P);");
        assert_eq!(r.queries[0].result, json!({ "failures": [] }));
        assert!(r.ok());
        let r = run("");
        assert!(r.queries.is_empty() && r.ok());
    }

    #[test]
    fn numeric_flag() {
        let s = parse_session("repr P = I(chi1, chi2, sigma); compute lfactor(P, tau);").unwrap();
        let r = evaluate(&s, Some(NumericOptions { q: 3, seed: 42 }));
        assert!(r.ok(), "{}", r.to_text());
        assert!(r.queries[0].numeric.is_some());
    }

    #[test]
    fn inadmissible_rho() {
        let r = run("repr P = IIb(chi, sigma); compute lfactor(P, sigma);");
        assert!(!r.ok());
        assert!(r.queries[0].error.as_deref().unwrap().contains("NoBesselModel"));
    }
}
