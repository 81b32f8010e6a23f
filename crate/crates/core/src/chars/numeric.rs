//! Numeric model: a character is evaluated at a uniformizer through Satake
//! values of the generators, with `ν(ϖ) = q^{-1}`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

use super::{lattice_rows, CharSystem, Character, LFactorProduct};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("pole at s = {s}: factor L(s, {factor}) has a vanishing denominator")]
    PoleAtS { factor: String, s: Complex64 },
    #[error("no Satake value for generator `{0}`")]
    MissingSatakeValue(String),
    #[error("residue field cardinality must exceed 1, got {0}")]
    BadModulus(u32),
}

/// Values `g(ϖ)` of generators, keyed by name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SatakePoint {
    values: BTreeMap<String, Complex64>,
}

impl SatakePoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, value: Complex64) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<Complex64> {
        self.values.get(name).copied()
    }
}

const POLE_TOL: f64 = 1e-12;

/// `χ(ϖ)` for a character of `sys`.
pub fn character_value(sys: &CharSystem, c: &Character, q: u32, satake: &SatakePoint) -> Result<Complex64, NumericError> {
    if q < 2 {
        return Err(NumericError::BadModulus(q));
    }
    let qf = q as f64;
    let a = c.nu_exponent();
    let mut v = Complex64::new(qf.powf(-(*a.numer() as f64) / (*a.denom() as f64)), 0.0);
    for (i, &e) in c.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = &sys.generators()[i].name;
        let s = satake.get(name).ok_or_else(|| NumericError::MissingSatakeValue(name.clone()))?;
        v *= s.powi(e as i32);
    }
    Ok(v)
}

/// `∏ (1 − χ(ϖ) q^{−s})^{−1}` over the factors of `p`.
pub fn numeric_eval(
    sys: &CharSystem,
    p: &LFactorProduct,
    q: u32,
    satake: &SatakePoint,
    s: Complex64,
) -> Result<Complex64, NumericError> {
    if q < 2 {
        return Err(NumericError::BadModulus(q));
    }
    let q_s = (-s * (q as f64).ln()).exp();
    let mut acc = Complex64::new(1.0, 0.0);
    for c in p.iter() {
        let den = Complex64::new(1.0, 0.0) - character_value(sys, c, q, satake)? * q_s;
        if den.norm() < POLE_TOL {
            return Err(NumericError::PoleAtS { factor: sys.render(c), s });
        }
        acc /= den;
    }
    Ok(acc)
}

/// Random Satake values consistent with the relations of `sys`.
///
/// Free generators get unit-modulus values; each pivot generator gets a
/// random root solving its relation, working upward from the last pivot.
///
/// Points violating a disequality (numerically, within 1e-6) are redrawn.
pub fn sample_point<R: Rng + ?Sized>(sys: &CharSystem, q: u32, rng: &mut R) -> SatakePoint {
    let diseq: Vec<(Character, Character)> = sys.all_disequalities().collect();
    let mut point = draw_point(sys, q, rng);
    for _ in 0..1000 {
        let ok = diseq.iter().all(|(a, b)| {
            match (character_value(sys, a, q, &point), character_value(sys, b, q, &point)) {
                (Ok(x), Ok(y)) => (x - y).norm() > 1e-6,
                _ => true,
            }
        });
        if ok {
            break;
        }
        point = draw_point(sys, q, rng);
    }
    point
}

fn draw_point<R: Rng + ?Sized>(sys: &CharSystem, q: u32, rng: &mut R) -> SatakePoint {
    let n = sys.generators().len();
    let rows = lattice_rows(sys);
    let mut vals: Vec<Option<Complex64>> = vec![None; n];
    let pivots: Vec<usize> = rows.iter().map(|r| r.0).collect();
    for (j, v) in vals.iter_mut().enumerate() {
        if !pivots.contains(&j) {
            *v = Some(Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)));
        }
    }
    let ln_q = (q as f64).ln();
    for (p, exps, a) in rows.iter().rev() {
        let d = exps[*p];
        // s_p^d = q^{a} / ∏_{j>p} s_j^{v_j}
        let mut rhs = Complex64::new((ln_q * (*a.numer() as f64) / (*a.denom() as f64)).exp(), 0.0);
        for (j, &e) in exps.iter().enumerate().skip(p + 1) {
            if e != 0 {
                rhs /= vals[j].expect("later columns are assigned first").powi(e as i32);
            }
        }
        let k = rng.random_range(0..d) as f64;
        let root = Complex64::from_polar(rhs.norm().powf(1.0 / d as f64), (rhs.arg() + std::f64::consts::TAU * k) / d as f64);
        vals[*p] = Some(root);
    }
    let mut point = SatakePoint::new();
    for (g, v) in sys.generators().iter().zip(vals) {
        point.insert(&g.name, v.expect("every column assigned"));
    }
    point
}

/// A random `s` in a box around the critical strip.
pub fn sample_s<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-10.0..10.0))
}
