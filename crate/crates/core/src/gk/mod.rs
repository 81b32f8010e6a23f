//! Formal calculus of finite-length Gl(2) and mirabolic modules: constituents,
//! central specializations, one-dimensional quotients, Euler characteristics.

mod euler;
mod table3;

use num_rational::Rational64;
use num_traits::Signed;
use thiserror::Error;

use crate::catalog::JordanBlock;
use crate::chars::{CharSystem, Character};

pub use euler::{euler_char, gk_expression, MirabolicAtom, MirabolicExpr, TestModule};
pub use table3::{listed_mu, zeta_mu, zeta_mu_row, ZetaRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GkError {
    #[error("malformed atom {0}")]
    MalformedAtom(String),
    #[error("central specialization table only covers non-generic types, got {0}")]
    GenericInput(String),
}

/// Named Gl(2) modules. `PrincSeries(a, b)` is `a × b`, induced from
/// `aν^{1/2} ⊠ bν^{-1/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gl2Atom {
    OneDim(Character),
    Steinberg(Character),
    PrincSeries(Character, Character),
    /// `a × b^{(n)}`: induced from a Jordan block of length `n`.
    JordanPrinc(Character, Character, u32),
    /// `χ M_(St:1)`: Steinberg socle, one-dimensional top.
    MSt1(Character),
    /// `χ M_(1:St)`: one-dimensional socle, Steinberg top.
    M1St(Character),
    /// `χ M^nc_(1:St:1)`: length three, no central character.
    MncThree(Character),
    /// `M^c_(a×b : a×b)`: the self-extension with central character.
    McPrincSelf(Character, Character),
    /// `χ M^c_(St:1:St:1)`.
    McSt1Self(Character),
    /// `twist · π_c` for an opaque cuspidal `π_c` with central character `omega`.
    Cuspidal { twist: Character, omega: Character },
}

/// Irreducible constituents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constituent {
    OneDim(Character),
    Steinberg(Character),
    /// Irreducible principal series, stored as a sorted pair.
    PrincSeries(Character, Character),
    Cuspidal { twist: Character, omega: Character },
}

/// Formal direct sum of atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gl2Expr {
    atoms: Vec<Gl2Atom>,
}

impl Gl2Expr {
    pub fn zero() -> Self {
        Gl2Expr::default()
    }

    pub fn from_atoms(atoms: Vec<Gl2Atom>) -> Self {
        Gl2Expr { atoms }
    }

    pub fn atoms(&self) -> &[Gl2Atom] {
        &self.atoms
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn plus(mut self, other: Gl2Expr) -> Gl2Expr {
        self.atoms.extend(other.atoms);
        self
    }

    pub fn render(&self, sys: &CharSystem) -> String {
        if self.atoms.is_empty() {
            return "0".to_string();
        }
        self.atoms.iter().map(|a| render_atom(a, sys)).collect::<Vec<_>>().join(" + ")
    }
}

/// `a/b` as a power of ν, if it is one.
fn nu_ratio(sys: &CharSystem, a: &Character, b: &Character) -> Option<Rational64> {
    let q = sys.div(a, b);
    q.exponents().is_empty().then(|| q.nu_exponent())
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

/// Constituents of `a × b`.
fn ps_constituents(sys: &CharSystem, a: &Character, b: &Character) -> Vec<Constituent> {
    match nu_ratio(sys, a, b) {
        Some(r) if r == Rational64::from_integer(1) => {
            let chi = sys.twist(a, -half());
            vec![Constituent::OneDim(chi.clone()), Constituent::Steinberg(chi)]
        }
        Some(r) if r == Rational64::from_integer(-1) => {
            let chi = sys.twist(a, half());
            vec![Constituent::OneDim(chi.clone()), Constituent::Steinberg(chi)]
        }
        _ => {
            let (x, y) = (sys.normalize(a), sys.normalize(b));
            let (x, y) = if x <= y { (x, y) } else { (y, x) };
            vec![Constituent::PrincSeries(x, y)]
        }
    }
}

fn is_irreducible_ps(sys: &CharSystem, a: &Character, b: &Character) -> bool {
    !matches!(nu_ratio(sys, a, b), Some(r) if r.abs() == Rational64::from_integer(1))
}

pub fn atom_constituents(atom: &Gl2Atom, sys: &CharSystem) -> Result<Vec<Constituent>, GkError> {
    use Gl2Atom::*;
    let n = |c: &Character| sys.normalize(c);
    Ok(match atom {
        OneDim(c) => vec![Constituent::OneDim(n(c))],
        Steinberg(c) => vec![Constituent::Steinberg(n(c))],
        PrincSeries(a, b) => ps_constituents(sys, a, b),
        JordanPrinc(a, b, len) => {
            if *len == 0 {
                return Err(GkError::MalformedAtom(render_atom(atom, sys)));
            }
            let base = ps_constituents(sys, a, b);
            (0..*len).flat_map(|_| base.clone()).collect()
        }
        MSt1(c) | M1St(c) => vec![Constituent::OneDim(n(c)), Constituent::Steinberg(n(c))],
        MncThree(c) => vec![Constituent::OneDim(n(c)), Constituent::OneDim(n(c)), Constituent::Steinberg(n(c))],
        McPrincSelf(a, b) => {
            if !is_irreducible_ps(sys, a, b) {
                return Err(GkError::MalformedAtom(render_atom(atom, sys)));
            }
            let base = ps_constituents(sys, a, b);
            base.iter().chain(base.iter()).cloned().collect()
        }
        McSt1Self(c) => {
            let one = Constituent::OneDim(n(c));
            let st = Constituent::Steinberg(n(c));
            vec![one.clone(), st.clone(), one, st]
        }
        Cuspidal { twist, omega } => vec![Constituent::Cuspidal { twist: n(twist), omega: n(omega) }],
    })
}

/// Sorted multiset of irreducible constituents.
pub fn constituents(e: &Gl2Expr, sys: &CharSystem) -> Result<Vec<Constituent>, GkError> {
    let mut out = Vec::new();
    for a in &e.atoms {
        out.extend(atom_constituents(a, sys)?);
    }
    out.sort();
    Ok(out)
}

/// Central character of an atom, `None` for `M^nc`.
pub fn atom_central_character(atom: &Gl2Atom, sys: &CharSystem) -> Option<Character> {
    use Gl2Atom::*;
    match atom {
        OneDim(c) | Steinberg(c) | MSt1(c) | M1St(c) | McSt1Self(c) => Some(sys.pow(c, 2)),
        PrincSeries(a, b) | McPrincSelf(a, b) | JordanPrinc(a, b, _) => Some(sys.mul(a, b)),
        Cuspidal { twist, omega } => Some(sys.mul(&sys.pow(twist, 2), omega)),
        MncThree(_) => None,
    }
}

/// `dim Hom(e, ρ̃∘det)` summed over atoms.
pub fn one_dim_quotient_dim(e: &Gl2Expr, rho_tilde: &Character, sys: &CharSystem) -> Result<u32, GkError> {
    use Gl2Atom::*;
    let hit = |c: &Character| u32::from(sys.equals(c, rho_tilde));
    // a × b has a one-dimensional top exactly when a/b = ν; the top is aν^{-1/2}
    let ps_top = |a: &Character, b: &Character| match nu_ratio(sys, a, b) {
        Some(r) if r == Rational64::from_integer(1) => hit(&sys.twist(a, -half())),
        _ => 0,
    };
    let mut total = 0;
    for atom in &e.atoms {
        total += match atom {
            OneDim(c) | MSt1(c) | MncThree(c) | McSt1Self(c) => hit(c),
            Steinberg(_) | M1St(_) | Cuspidal { .. } => 0,
            PrincSeries(a, b) => ps_top(a, b),
            JordanPrinc(a, b, len) => {
                if *len == 0 {
                    return Err(GkError::MalformedAtom(render_atom(atom, sys)));
                }
                len * ps_top(a, b)
            }
            McPrincSelf(a, b) => {
                if !is_irreducible_ps(sys, a, b) {
                    return Err(GkError::MalformedAtom(render_atom(atom, sys)));
                }
                0
            }
        };
    }
    Ok(total)
}

/// `ζ_μ(j_!i_*(A))`: a block `χ^{(n)}` gives `χν^{-1/2} × χ^{-1}ν^{1/2}μ` with
/// Jordan length `n`.
pub fn zeta_mu_jshriek(a: &[JordanBlock], mu: &Character, sys: &CharSystem) -> Gl2Expr {
    let atoms = a
        .iter()
        .map(|blk| {
            let x = sys.twist(&blk.chi, -half());
            let y = sys.twist(&sys.div(mu, &blk.chi), half());
            if blk.len == 1 {
                Gl2Atom::PrincSeries(x, y)
            } else {
                Gl2Atom::JordanPrinc(x, y, blk.len)
            }
        })
        .collect();
    Gl2Expr::from_atoms(atoms)
}

fn prefixed(sys: &CharSystem, c: &Character, body: &str) -> String {
    if sys.is_trivial(c) {
        body.to_string()
    } else {
        format!("{}*{body}", sys.render(c))
    }
}

pub fn render_atom(atom: &Gl2Atom, sys: &CharSystem) -> String {
    use Gl2Atom::*;
    let r = |c: &Character| sys.render(c);
    match atom {
        OneDim(c) => format!("({} o det)", r(c)),
        Steinberg(c) => prefixed(sys, c, "St"),
        PrincSeries(a, b) => format!("{} x {}", r(a), r(b)),
        JordanPrinc(a, b, n) => format!("{} x {}^({n})", r(a), r(b)),
        MSt1(c) => prefixed(sys, c, "M_(St:1)"),
        M1St(c) => prefixed(sys, c, "M_(1:St)"),
        MncThree(c) => prefixed(sys, c, "M^nc_(1:St:1)"),
        McPrincSelf(a, b) => format!("M^c_({0} x {1} : {0} x {1})", r(a), r(b)),
        McSt1Self(c) => prefixed(sys, c, "M^c_(St:1:St:1)"),
        Cuspidal { twist, .. } => prefixed(sys, twist, "pi_c"),
    }
}

pub fn render_constituent(c: &Constituent, sys: &CharSystem) -> String {
    match c {
        Constituent::OneDim(x) => render_atom(&Gl2Atom::OneDim(x.clone()), sys),
        Constituent::Steinberg(x) => render_atom(&Gl2Atom::Steinberg(x.clone()), sys),
        Constituent::PrincSeries(a, b) => render_atom(&Gl2Atom::PrincSeries(a.clone(), b.clone()), sys),
        Constituent::Cuspidal { twist, omega } => {
            render_atom(&Gl2Atom::Cuspidal { twist: twist.clone(), omega: omega.clone() }, sys)
        }
    }
}
